#include <random>

#include "doctest.h"
#include "twisted_hecke/dloper.hpp"
#include "twisted_hecke/flagk.hpp"

using namespace th;

namespace {

WeylPtr G(const char* name) { return WeylGroup::make(RootSystem::parse(name)); }

// Random Laurent polynomial in z1..zn, used to test operators by evaluation
// instead of by the coefficientwise algebra.
RatFunc random_z(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
    RatFunc f;
    for (int k = 0; k < 3; ++k) {
        Monomial m;
        for (int i = 1; i <= n; ++i) m[z_(i).slot()] = static_cast<Monomial::Exp>(e(rng));
        f += RatFunc::monomial(m, QRat(c(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("quadratic relation, algebra and evaluation agree") {
    const WeylPtr W = G("A3");
    const RatFunc my = -y_var();
    std::mt19937_64 rng(3);
    for (const QRat& a : {QRat(1, 3), QRat(-5, 4), QRat(7, 2), QRat(0), QRat(2), QRat(-1)})
        for (Variant v : {Variant::Plain, Variant::Hat})
            for (int i = 1; i <= 2; ++i) {
                CAPTURE(a.str());
                CHECK(verify_quadratic(W, i, a, v));
                const QRat partner = a.is_integer() ? QRat(1) - a : -a;
                const OperatorElement q = make_T(W, v, i, partner, Family::z) * make_T(W, v, i, a, Family::z);
                const RatFunc f = random_z(rng, 3);
                CHECK(q.apply(f) == my * f);
            }
}

TEST_CASE("quadratic relation: wrong partner is rejected") {
    const WeylPtr W = G("A3");
    // T(a) o T(a) is not scalar for non-integral a
    const OperatorElement sq = make_Tfr(W, 1, QRat(1, 3)) * make_Tfr(W, 1, QRat(1, 3));
    CHECK_FALSE(op_equal(sq, OperatorElement::scalar(W, -y_var())));
    // for integral a the partner is 1 - a, not -a
    const OperatorElement bad = make_Tfr(W, 1, QRat(-2)) * make_Tfr(W, 1, QRat(2));
    CHECK_FALSE(op_equal(bad, OperatorElement::scalar(W, -y_var())));
}

TEST_CASE("braid relations with parameters") {
    CHECK(verify_braid(BraidForm::A, {QRat(1, 5), QRat(2, 3), QRat(-7, 4)}, Variant::Plain));
    CHECK(verify_braid(BraidForm::A, {QRat(0), QRat(1), QRat(3)}, Variant::Hat));
    CHECK(verify_braid(BraidForm::C2, {QRat(1, 3), QRat(-1, 4)}, Variant::Plain));
    CHECK(verify_braid(BraidForm::C2, {QRat(1), QRat(-2)}, Variant::Hat));
    CHECK(verify_braid(BraidForm::G2, {QRat(2, 5), QRat(1, 6)}, Variant::Plain));
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b) {
            CHECK(verify_braid(BraidForm::AMiddle, {QRat(a), QRat(b), QRat(a + b)}, Variant::Plain));
            CHECK(verify_braid(BraidForm::AMiddle, {QRat(a), QRat(b), QRat(a + b - 1)}, Variant::Hat));
            // a+b+1 is not a valid middle parameter
            CHECK_FALSE(verify_braid(BraidForm::AMiddle, {QRat(a), QRat(b), QRat(a + b + 1)}, Variant::Plain));
        }
}

TEST_CASE("braid relation at a weight, both sides") {
    for (const char* name : {"A3", "C2", "G2"}) {
        const WeylPtr W = G(name);
        Weight l(static_cast<std::size_t>(W->system().dim()));
        for (std::size_t k = 0; k < l.size(); ++k) l[k] = QRat(static_cast<long>(2 * k + 1), 7);
        CAPTURE(name);
        CHECK(verify_braid_weight(W, l, false));
        CHECK(verify_braid_weight(W, l, true));
    }
}

TEST_CASE("left and right operators commute") {
    const WeylPtr W = G("A3");
    CHECK(verify_LR_commute(W, 1, QRat(1, 3), 2, QRat(-2, 5)));
    CHECK(verify_LR_commute(W, 2, QRat(2), 2, QRat(0)));
}

TEST_CASE("composition is associative and apply respects it") {
    const WeylPtr W = G("A3");
    const OperatorElement a = make_Tfr(W, 1, QRat(1, 2)), b = make_Tfl(W, 2, QRat(-1, 3)), c = make_Tfr(W, 2, QRat(2));
    CHECK(op_equal((a * b) * c, a * (b * c)));
    CHECK(op_equal(compose({a, b, c}), a * b * c));
    std::mt19937_64 rng(9);
    const RatFunc f = random_z(rng, 3);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
}
