#include <random>
#include <stdexcept>

#include "doctest.h"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/ratfunc.hpp"
#include "twisted_hecke/serialize.hpp"

using namespace th;

namespace {

// Small random Laurent polynomial in t1, t2, x1, y.
LaurentPoly random_poly(std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<int> e(-2, 2), c(-4, 4);
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        m[t_(1).slot()] = static_cast<Monomial::Exp>(e(rng));
        m[t_(2).slot()] = static_cast<Monomial::Exp>(e(rng));
        m[x_(1).slot()] = static_cast<Monomial::Exp>(e(rng));
        m[kSlotY] = static_cast<Monomial::Exp>(std::abs(e(rng)));
        ts.push_back({m, QRat(c(rng), 1 + std::abs(c(rng)))});
    }
    return LaurentPoly::from_terms(ts);
}

RatFunc t12() { return RatFunc::monomial(Monomial::var(t_(1)) / Monomial::var(t_(2))); }

} // namespace

TEST_CASE("QRat parse and rounding") {
    CHECK(QRat::parse("6/4") == QRat(3, 2));
    CHECK(QRat::parse("-7") == QRat(-7));
    CHECK_THROWS(QRat::parse("0.5"));
    CHECK_THROWS(QRat::parse("1/0"));
    CHECK(ceil_q(QRat(-1, 2)) == 0);
    CHECK(floor_q(QRat(-1, 2)) == -1);
    CHECK(ceil_q(QRat(3)) == 3);
    QRat d;
    CHECK(rational_sqrt(QRat(9, 4), d));
    CHECK(d == QRat(3, 2));
    CHECK_FALSE(rational_sqrt(QRat(2), d));
}

TEST_CASE("monomial order is graded lex") {
    const Monomial a = Monomial::var(t_(1));
    const Monomial b = Monomial::var(t_(2), 2);
    CHECK(a < b); // lower degree first
    CHECK(Monomial::var(t_(2)) < a);
    CHECK((a / a).is_one());
    CHECK(Monomial::var(t_(1), 4).content() == 4);
    CHECK(VarId::parse("x3") == x_(3));
    CHECK(VarId::parse("y") == y_());
}

TEST_CASE("Laurent ring laws hold on random polynomials") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        const LaurentPoly a = random_poly(rng, 4), b = random_poly(rng, 3), c = random_poly(rng, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == LaurentPoly());
        if (!b.is_zero()) {
            auto q = (a * b).divide_exact(b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}

TEST_CASE("binomial division is exact or refuses") {
    const Monomial m = Monomial::var(t_(1)) / Monomial::var(t_(2));
    const LaurentPoly p = exact_div_geom(5, m); // 1 + m + ... + m^4
    auto q = (p * RatFunc::binomial(QRat(-1), m)).divide_binomial(QRat(-1), m);
    REQUIRE(q.has_value());
    CHECK(*q == p);
    CHECK_FALSE(p.divide_binomial(QRat(1), m).has_value());
    // negative n: (1 - L^-2)/(1 - L) = -L^-1 - L^-2
    CHECK(exact_div_geom(-2, m) == LaurentPoly::term(QRat(-1), m.inverse()) - LaurentPoly::monomial(m.pow(-2)));
}

TEST_CASE("rational functions: field laws and canonical denominators") {
    const RatFunc y = RatFunc::var(y_());
    const RatFunc L = t12();
    const RatFunc f = (RatFunc(1) + y * L) / (RatFunc(1) - L);
    const RatFunc g = (RatFunc(1) + y) / (RatFunc(1) - L.inverse());
    CHECK((f + g) - g == f);
    CHECK((f * g) / g == f);
    CHECK(f * f.inverse() == RatFunc(1));
    // 1/(1 - L) and -L^-1/(1 - L^-1) are the same function and the same form
    const RatFunc u = RatFunc(1) / (RatFunc(1) - L);
    const RatFunc v = -L.inverse() / (RatFunc(1) - L.inverse());
    CHECK(u == v);
    CHECK(u.same_form(v));
    // (1 - L^2) / (1 - L) cancels to a polynomial
    CHECK(((RatFunc(1) - L.pow(2)) / (RatFunc(1) - L)).is_polynomial());
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), std::domain_error);
}

TEST_CASE("text and JSON round trips") {
    std::mt19937_64 rng(5);
    const RatFunc L = t12();
    for (int it = 0; it < 25; ++it) {
        const RatFunc f = RatFunc(random_poly(rng, 3)) / (RatFunc(1) - L) / (RatFunc(1) + RatFunc::var(y_()) * L);
        CHECK(parse_ratfunc(f.str()) == f);
        CHECK(ratfunc_from_json(ratfunc_to_json(f)) == f);
        CHECK(parse_ratfunc(f.str()).str() == f.str());
    }
    CHECK(parse_laurent("0").is_zero());
    CHECK(parse_laurent("3*t1^1*t2^-1 + -1*y^1") == LaurentPoly::term(QRat(3), Monomial::var(t_(1)) / Monomial::var(t_(2))) -
                                                         LaurentPoly::var(y_()));
    CHECK_THROWS(parse_laurent("3*q1^2"));
}
