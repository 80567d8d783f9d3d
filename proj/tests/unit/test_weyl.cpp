#include <set>

#include "doctest.h"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/weyl.hpp"

using namespace th;

namespace {
WeylPtr G(const char* name) { return WeylGroup::make(RootSystem::parse(name)); }
} // namespace

TEST_CASE("group orders and longest elements") {
    struct Row { const char* name; int order, longest, positive; };
    for (const Row& r : {Row{"A2", 2, 1, 1}, Row{"A3", 6, 3, 3}, Row{"A4", 24, 6, 6}, Row{"C2", 8, 4, 4},
                         Row{"G2", 12, 6, 6}}) {
        CAPTURE(r.name);
        const WeylPtr W = G(r.name);
        CHECK(W->size() == r.order);
        CHECK(W->length(W->longest()) == r.longest);
        CHECK(static_cast<int>(W->system().positive_roots().size()) == r.positive);
    }
    CHECK(G("GL3")->size() == 6);
    CHECK_THROWS_AS(RootSystem::parse("B3"), Error);
}

TEST_CASE("reduced words of w0") {
    // S4: 16, W(C2): 2, W(G2): 2
    CHECK(G("A4")->reduced_words(G("A4")->longest()).size() == 16);
    CHECK(G("C2")->reduced_words(G("C2")->longest()).size() == 2);
    CHECK(G("G2")->reduced_words(G("G2")->longest()).size() == 2);
}

TEST_CASE("length equals inversion count and words are reduced") {
    for (const char* name : {"A4", "C2", "G2"}) {
        const WeylPtr W = G(name);
        for (int w = 0; w < W->size(); ++w) {
            CHECK(W->length(w) == W->inversion_count(w));
            for (const Word& word : W->reduced_words(w)) {
                CHECK(W->is_reduced(word));
                CHECK(W->from_word(word) == w);
            }
        }
    }
}

TEST_CASE("Bruhat order is graded with identity and w0 at the ends") {
    const WeylPtr W = G("A4");
    for (int w = 0; w < W->size(); ++w) {
        CHECK(W->bruhat_leq(W->identity(), w));
        CHECK(W->bruhat_leq(w, W->longest()));
        for (int i = 1; i <= W->rank(); ++i)
            if (W->longer_right(w, i)) CHECK(W->bruhat_leq(w, W->rmul(w, i)));
    }
    // 132 and 213 are incomparable
    const WeylPtr S3 = G("A3");
    CHECK_FALSE(S3->bruhat_leq(S3->parse("132"), S3->parse("213")));
}

TEST_CASE("element parsing: one-line and words agree") {
    const WeylPtr W = G("A3");
    CHECK(W->parse("231") == W->parse("s1 s2"));
    CHECK(W->parse("s1s2") == W->parse("s1 s2"));
    CHECK(W->format(W->parse("s1")) == "213");
    CHECK(W->one_line(W->parse("231")) == std::vector<int>{2, 3, 1});
    for (int w = 0; w < W->size(); ++w) CHECK(W->parse(W->format(w)) == w);
    CHECK_THROWS_AS(W->parse("s5"), Error);
    // w e_j = e_{w(j)}
    const Weight e1 = {QRat(1), QRat(0), QRat(0)};
    CHECK(W->act(W->parse("231"), e1) == Weight{QRat(0), QRat(1), QRat(0)});
}

TEST_CASE("coroot pairing and genericity") {
    const RootSystem C2 = RootSystem::parse("C2");
    const Weight l = {QRat(1, 3), QRat(1, 5)};
    // long root a2 = (0,2): <l, a2^vee> = l_2
    CHECK(C2.pairing(l, 2) == QRat(1, 5));
    CHECK(C2.pairing(l, 1) == QRat(2, 15));
    CHECK(C2.is_generic(l));
    CHECK_FALSE(C2.is_generic({QRat(1, 3), QRat(1, 3)}));
    CHECK(C2.same_alcove(l, {QRat(1, 4), QRat(1, 6)}));
    CHECK_FALSE(C2.same_alcove(l, {QRat(1, 5), QRat(1, 3)}));
    CHECK_THROWS_AS(C2.check_weight({QRat(1)}), Error);
    CHECK(parse_weight("1/2, -3") == Weight{QRat(1, 2), QRat(-3)});
    CHECK(format_weight({QRat(1, 2), QRat(-3)}) == "1/2,-3");
}
