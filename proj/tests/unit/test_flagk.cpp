#include "doctest.h"
#include "twisted_hecke/bosa.hpp"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/flagk.hpp"
#include "twisted_hecke/serialize.hpp"
#include "twisted_hecke/wallcross.hpp"

using namespace th;

namespace {

WeylPtr G(const char* name) { return WeylGroup::make(RootSystem::parse(name)); }
RatFunc t12() { return RatFunc::monomial(Monomial::var(t_(1)) / Monomial::var(t_(2))); }

// The GL2 data point: ((1+y)(t1/t2)^{1-ceil(l2-l1)}, 1 + y t2/t1).
LocalizedClass gl2_expected(const WeylPtr& W, const Weight& l) {
    LocalizedClass e(W);
    e[0] = (RatFunc(1) + y_var()) * t12().pow(static_cast<int>(1 - ceil_q(l[1] - l[0])));
    e[W->simple(1)] = RatFunc(1) + y_var() * t12().inverse();
    return e;
}

} // namespace

TEST_CASE("GL2 point class and the 1-cell") {
    const WeylPtr W = G("A2");
    const int s1 = W->simple(1);
    CHECK(mc_point(W)[0] == RatFunc(1) - t12());
    CHECK(mc_point(W)[s1].is_zero());
    for (const Weight& l : {Weight{QRat(1, 7), QRat(3, 7)}, Weight{QRat(0), QRat(0)}, Weight{QRat(3, 2), QRat(-1, 3)}}) {
        CAPTURE(format_weight(l));
        const LocalizedClass e = gl2_expected(W, l);
        CHECK(dl_right(1, l, mc_point(W)) == e);
        const Weight sl = W->act(s1, l);
        CHECK(mc_cell(W, s1, sl, Route::Right) == e);
        CHECK(mc_cell(W, s1, sl, Route::Left) == e);
    }
    // at l = (1/7, 3/7) the pair is not mC(s1, l) itself
    const Weight l = {QRat(1, 7), QRat(3, 7)};
    CHECK_FALSE(mc_cell(W, s1, l) == gl2_expected(W, l));
}

TEST_CASE("recursion agrees with the Bott-Samelson oracle") {
    for (const char* name : {"A3", "C2"}) {
        const WeylPtr W = G(name);
        const Weight l = W->system().dim() == 3 ? Weight{QRat(1, 7), QRat(-4, 11), QRat(2)} : Weight{QRat(5, 7), QRat(-3, 11)};
        for (int w = 0; w < W->size(); ++w)
            for (const Word& word : W->reduced_words(w)) {
                CAPTURE(W->format_word(word));
                CHECK(mc_via_lrr(W, word, l) == mc_cell(W, w, l, RouteSpec{Route::Right, word}));
            }
    }
}

TEST_CASE("oracle: negative control with a shifted slope") {
    const WeylPtr W = G("A3");
    const Weight l = {QRat(1, 7), QRat(2, 7), QRat(0)};
    const Weight off = {QRat(8, 7), QRat(2, 7), QRat(0)}; // different alcove
    const int w0 = W->longest();
    CHECK_FALSE(mc_via_lrr(W, W->normal_form(w0), off) == mc_cell(W, w0, l));
}

TEST_CASE("frozen stable envelope in GL3") {
    const WeylPtr W = G("A3");
    const Weight l = {QRat(1, 7), QRat(2, 7), QRat(0)};
    const int w = W->parse("231");
    // restriction at 231, frozen from the Bott-Samelson oracle
    const RatFunc frozen = parse_ratfunc("-1*t1^-2*t2^2*h^2 + 1*t1^-2*t2^1*t3^1*h^2 + 1*t1^-1*t2^2*t3^-1 + "
                                         "-1*t1^-1*t3^1 + -1*t2^1*t3^-1*h^-2 + 1*h^-2");
    const LocalizedClass oracle = normalize_stab(mc_via_lrr(W, W->normal_form(w), l), W->length(w));
    CHECK(oracle[w] == frozen);
    const LocalizedClass st = stable_envelope(W, w, l);
    CHECK(st == oracle);
    CHECK(stable_envelope(W, w, l, Route::Left) == oracle);
    CHECK(st[W->parse("312")].is_zero());
    CHECK_THROWS_AS(stable_envelope(W, w, {QRat(0), QRat(0), QRat(0)}), Error);
}

TEST_CASE("reduced-word independence in W(G2)") {
    const WeylPtr W = G("G2");
    const Weight lw = {QRat(2, 7), QRat(-1, 11)};
    REQUIRE(W->system().is_generic(lw));
    for (int w = 0; w < W->size(); ++w) {
        const auto words = W->reduced_words(w);
        const LocalizedClass first = mc_cell(W, w, lw, RouteSpec{Route::Right, words.front()});
        for (const Word& word : words) CHECK(mc_cell(W, w, lw, RouteSpec{Route::Right, word}) == first);
    }
}

TEST_CASE("left and right routes agree, and non-reduced words are refused") {
    const WeylPtr W = G("A4");
    const Weight l = {QRat(1, 7), QRat(-2, 11), QRat(3, 7), QRat(0)};
    for (int w = 0; w < W->size(); w += 5) CHECK(mc_cell(W, w, l, Route::Left) == mc_cell(W, w, l, Route::Right));
    CHECK_THROWS_AS(mc_cell(W, W->identity(), l, RouteSpec{Route::Right, Word{1, 1}}), Error);
    CHECK_THROWS_AS(mc_cell(W, W->identity(), {QRat(1)}), Error);
}

TEST_CASE("Bruhat support") {
    const WeylPtr W = G("A4");
    const Weight l = {QRat(1, 7), QRat(-2, 11), QRat(3, 7), QRat(0)};
    for (int w = 0; w < W->size(); ++w) {
        const LocalizedClass c = mc_cell(W, w, l);
        CHECK(support_violations(c, w).empty());
        CHECK_FALSE(c[w].is_zero());
    }
    // negative control: a class with an entry outside the interval is caught
    const WeylPtr S3 = G("A3");
    LocalizedClass bad = mc_cell(S3, S3->simple(1), {QRat(1, 7), QRat(2, 7), QRat(0)});
    bad[S3->longest()] = RatFunc(1);
    CHECK(support_violations(bad, S3->simple(1)) == std::vector<int>{S3->longest()});
}

TEST_CASE("integral shifts: periodicity holds, fractional shifts are refused") {
    const WeylPtr W = G("A3");
    const Weight l = {QRat(1, 7), QRat(2, 7), QRat(-3, 11)};
    for (const Weight& mu : {Weight{QRat(1), QRat(0), QRat(0)}, Weight{QRat(0), QRat(-2), QRat(1)}})
        for (int w = 0; w < W->size(); ++w) CHECK(periodicity_check(W, w, l, mu).ok);
    CHECK_THROWS_AS(periodicity_check(W, 0, l, {QRat(1, 2), QRat(0), QRat(0)}), Error);
}

TEST_CASE("(-y)^k with half-integer exponents") {
    CHECK(minus_y_pow_half(4, y_var()) == y_var().pow(2));
    CHECK(minus_y_pow_half(2, minus_h2()) == h_var().pow(2));
    CHECK_THROWS_AS(minus_y_pow_half(3, y_var()), Error);
}

TEST_CASE("JSON and text output") {
    const WeylPtr W = G("A2");
    const LocalizedClass c = mc_cell(W, W->simple(1), {QRat(1, 7), QRat(3, 7)});
    CHECK(c.to_text() == "12: 1*t1^1*t2^-1*y^1 + 1*t1^1*t2^-1\n21: 1*t1^-1*t2^1*y^1 + 1\n");
    CHECK(c.to_json("1/7,3/7").find("\"system\":\"A2\"") != std::string::npos);
}
