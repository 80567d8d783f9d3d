#include "doctest.h"
#include "twisted_hecke/bosa.hpp"
#include "twisted_hecke/dloper.hpp"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/matschub.hpp"

using namespace th;

namespace {

WeylPtr G(const char* name) { return WeylGroup::make(RootSystem::parse(name)); }
RatFunc ratio(VarId a, VarId b) { return RatFunc::monomial(Monomial::var(a) / Monomial::var(b)); }

const Weight kSlopes3[] = {{QRat(1, 7), QRat(-4, 11), QRat(2)}, {QRat(0), QRat(0), QRat(0)}, {QRat(5, 2), QRat(1, 3), QRat(-1, 5)}};

} // namespace

TEST_CASE("matrix class of the identity by hand in GL2") {
    const RatFunc y = y_var();
    // slope 0: every exponent 1 - ceil(0) = 1
    const RatFunc hand = (RatFunc(1) + y).pow(2) * ratio(x_(1), t_(1)) * ratio(x_(2), t_(2)) *
                         (RatFunc(1) + y * ratio(x_(2), t_(1))) * (RatFunc(1) - ratio(x_(1), t_(2)));
    CHECK(mc_matrix_id(2, {QRat(0), QRat(0)}) == hand);
    // slope (1/2, 1): exponents 0 and 0
    const RatFunc hand2 = (RatFunc(1) + y).pow(2) * (RatFunc(1) + y * ratio(x_(2), t_(1))) * (RatFunc(1) - ratio(x_(1), t_(2)));
    CHECK(mc_matrix_id(2, {QRat(1, 2), QRat(1)}) == hand2);
    CHECK_THROWS_AS(mc_matrix_id(2, {QRat(0)}), Error);
}

TEST_CASE("matrix classes: routes, closed formula and Kirwan image in GL3") {
    const WeylPtr W = G("A3");
    for (const Weight& l : kSlopes3)
        for (int w = 0; w < W->size(); ++w) {
            CAPTURE(W->format(w));
            const RatFunc left = mc_matrix(W, w, l, Route::Left);
            CHECK(left == mc_matrix(W, w, l, Route::Right));
            CHECK(left == matrix_closed_sum(*W, W->normal_form(w), l));
            CHECK(verify_kirwan_division(W, w, l, Route::Left).ok);
        }
}

TEST_CASE("closed formula as printed does not match") {
    const WeylPtr W = G("A3");
    const Weight l = kSlopes3[0];
    int literal_hits = 0;
    for (int w = 0; w < W->size(); ++w)
        literal_hits += mc_matrix(W, w, l) == matrix_closed_sum(*W, W->normal_form(w), l, ClosedFormula::Literal);
    CHECK(literal_hits == 0);
}

TEST_CASE("Kirwan map sends x_i to t_sigma(i)") {
    const WeylPtr W = G("A3");
    const int s = W->parse("231");
    CHECK(kirwan_restrict(*W, ratio(x_(1), x_(3)), s) == ratio(t_(2), t_(1)));
    CHECK_THROWS_AS(kirwan(W, RatFunc(1) / (RatFunc(1) - ratio(x_(1), t_(1)))), Error);
}

TEST_CASE("lifted operators intertwine the Kirwan map") {
    const WeylPtr W = G("A3");
    const Weight l = {QRat(1, 7), QRat(-4, 11), QRat(2)};
    const std::vector<RatFunc> mons = lift_test_monomials(3);
    CHECK(mons.size() == 729);
    for (std::size_t k = 0; k < mons.size(); k += 37)
        for (int i = 1; i <= 2; ++i) {
            CHECK(lift_check(W, i, l, mons[k]).ok);
            CHECK(conjugation_check(W, i, l, mons[k]).ok);
        }
}

TEST_CASE("GL2 f0: the two lifts differ before the Kirwan map") {
    const WeylPtr W = G("A2");
    const Weight l = {QRat(1, 7), QRat(3, 7)};
    const Weight sl = W->act(W->simple(1), l);
    const RatFunc f0 = RatFunc(1) - ratio(x_(1), t_(2));
    const RatFunc r = make_Tcr(W, 1, l).apply(f0);
    const RatFunc lft = make_Tcl(W, 1, sl).apply(f0);
    CHECK_FALSE(r == lft);
    CHECK(kirwan(W, r) == kirwan(W, lft));
    CHECK(kirwan(W, r) == mc_cell(W, W->simple(1), sl));
}

TEST_CASE("divisor multiplicities on the right resolution") {
    const WeylPtr W = G("A4");
    const Word word = {2, 3};
    const Weight l = {QRat(1, 2), QRat(1, 3), QRat(1, 5), QRat(1, 7)};
    const MultiplicityTable m = matrix_multiplicities(*W, word, Resolution::Right, l);
    CHECK(m.boundary_B == std::vector<QRat>{QRat(1, 2), QRat(1, 7), QRat(1, 3), QRat(1, 5)});
    CHECK(m.letters == std::vector<QRat>{QRat(4, 21), QRat(2, 35)});
    CHECK(m.pairings == m.letters);
    const MultiplicityTable ml = matrix_multiplicities(*W, word, Resolution::Left, l);
    CHECK(ml.letters == ml.pairings);
}

TEST_CASE("matrix classes need type A") {
    const WeylPtr W = G("C2");
    CHECK_THROWS_AS(mc_matrix(W, 0, {QRat(0), QRat(0)}), Error);
}
