#include "doctest.h"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/parabolic.hpp"
#include "twisted_hecke/wallcross.hpp"

using namespace th;

namespace {
WeylPtr G(const char* name) { return WeylGroup::make(RootSystem::parse(name)); }
} // namespace

TEST_CASE("slope wall-crossing across H_alpha for GL3") {
    const WeylPtr W = G("A3");
    const Weight mu = {QRat(1, 5), QRat(1, 5), QRat(-3, 11)}; // on H_{a1,0}
    const IVec a1 = W->system().simple_root(1);
    const auto [l1, l2] = slopes_across(*W, a1, mu, QRat(1, 20));
    CHECK(classify_wall(*W, a1, l1, l2) == WallRelation::Adjacent);
    for (int w = 0; w < W->size(); ++w) CHECK(wallcross_slope_check(W, w, a1, l1, l2).ok);
    // same alcove: classes are constant
    const Weight l3 = {l1[0] + QRat(1, 200), l1[1], l1[2]};
    CHECK(classify_wall(*W, a1, l1, l3) == WallRelation::SameAlcove);
    for (int w = 0; w < W->size(); ++w) CHECK(wallcross_slope_check(W, w, a1, l1, l3).ok);
    // far apart: refused
    CHECK_THROWS_AS(classify_wall(*W, a1, l1, {QRat(3), QRat(0), QRat(0)}), Error);
}

TEST_CASE("chamber wall-crossing for all of S3") {
    const WeylPtr W = G("A3");
    const Weight l = {QRat(1, 7), QRat(-4, 11), QRat(2, 9)};
    for (int sigma = 0; sigma < W->size(); ++sigma)
        for (int s = 1; s <= 2; ++s)
            for (int w = 0; w < W->size(); ++w) CHECK(wallcross_chamber_check(W, w, sigma, s, l).ok);
}

TEST_CASE("quadratic relation on classes, generic and integral pairings") {
    const WeylPtr W = G("A3");
    const LocalizedClass xi = mc_cell(W, W->parse("231"), {QRat(1, 7), QRat(2, 7), QRat(0)});
    CHECK(quadratic_on_class(1, {QRat(1, 7), QRat(2, 7), QRat(0)}, xi).ok);
    CHECK(quadratic_on_class(1, {QRat(1), QRat(0), QRat(0)}, xi).ok);
    CHECK(quadratic_left_on_class(2, {QRat(1, 7), QRat(2, 7), QRat(0)}, xi).ok);
}

TEST_CASE("anti-ample slope collapses to the untwisted classes") {
    for (const char* name : {"A3", "C2"}) {
        const WeylPtr W = G(name);
        const Weight lm = small_anti_ample(*W);
        CHECK(is_small_anti_ample(*W, lm));
        CHECK_FALSE(is_small_anti_ample(*W, Weight(lm.size(), QRat(0))));
        const Weight zero(lm.size(), QRat(0));
        for (int w = 0; w < W->size(); ++w) {
            CHECK(mc_cell(W, w, lm) == mc_cell(W, w, zero));
            for (int wp = 0; wp < W->size(); ++wp)
                if (W->length(W->mul(wp, w)) == W->length(wp) + W->length(w)) CHECK(antiample_check(W, wp, w, lm).ok);
        }
    }
}

TEST_CASE("parabolic pushforward: fibration and Deodhar cases") {
    const WeylPtr W = G("A3");
    for (int s = 1; s <= 2; ++s) CHECK(fibration_check(W, s));
    const auto Ps = maximal_parabolics(*W);
    REQUIRE(Ps.size() == 2);
    for (const auto& P : Ps) {
        const Parabolic GP(W, P);
        CHECK(GP.size() == 3);
        // an invariant slope: equal coordinates on the block of P
        Weight l = {QRat(2, 7), QRat(2, 7), QRat(-3, 11)};
        if (P == std::vector<int>{2}) l = {QRat(-3, 11), QRat(2, 7), QRat(2, 7)};
        REQUIRE(GP.is_invariant(l));
        int cases[4] = {0, 0, 0, 0};
        for (int w : GP.reps())
            for (int s = 1; s <= 2; ++s) {
                const LeftActionReport r = left_action_check(GP, s, w, l);
                CHECK(r.proposition_ok);
                ++cases[static_cast<int>(r.kind)];
            }
        CHECK(cases[1] > 0);
        CHECK(cases[2] > 0);
        CHECK(cases[3] > 0);
        CHECK_THROWS_AS(mc_coset(GP, GP.reps()[1], {QRat(1, 7), QRat(2, 7), QRat(0)}), Error);
    }
}
