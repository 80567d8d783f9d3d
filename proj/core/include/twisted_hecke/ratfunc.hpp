#pragma once

// Rational functions num / den over Q in the fixed variable universe.
//
// The denominator is kept factored: a sorted list of normalized factors with
// multiplicities. A factor is normalized when its least term (in the monomial
// order) is exactly 1; the unit removed during normalization goes into the
// numerator. Binomials 1 - d^2 m^2 are split into (1 - d m)(1 + d m).
//
// Reduction cancels each denominator factor against the numerator by trial
// division. Every denominator produced by the operators here is a product of
// binomials, and binomials 1 + c*g with g primitive are irreducible, so the
// form is canonical in practice. Equality still falls back to
// cross-multiplication when the stored forms differ.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/laurent.hpp"

namespace th {

struct DenFactor {
    LaurentPoly poly; // normalized, non-constant
    int mult;
    friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const LaurentPoly& p) : num_(p) {}
    RatFunc(const QRat& c) : num_(c) {}
    RatFunc(long c) : num_(QRat(c)) {}
    RatFunc(int c) : num_(QRat(c)) {}

    static RatFunc fraction(const LaurentPoly& num, const LaurentPoly& den);
    static RatFunc monomial(const Monomial& m, const QRat& c = QRat(1)) {
        return RatFunc(LaurentPoly::term(c, m));
    }
    static RatFunc var(VarId v, int power = 1) { return RatFunc(LaurentPoly::var(v, power)); }
    // 1 + c*m
    static LaurentPoly binomial(const QRat& c, const Monomial& m);

    const LaurentPoly& num() const { return num_; }
    const std::vector<DenFactor>& den_factors() const { return den_; }
    LaurentPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    RatFunc pow(int k) const;

    // Same stored form. Implies mathematical equality.
    bool same_form(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    // Mathematical equality: stored form first, then cross-multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    // Substitution where every variable goes to a scalar times a monomial.
    // Unlisted variables stay fixed.
    RatFunc substitute_terms(const std::function<Term(const Monomial&)>& f) const;
    // General substitution; variables absent from the map are left alone.
    RatFunc substitute(const std::map<int, RatFunc>& bindings_by_slot) const;
    // Convenience: pure monomial relabeling (e.g. a Weyl group action).
    RatFunc map_monomials(const std::function<Monomial(const Monomial&)>& f) const;

    // "num / den" with den expanded; just "num" when den is 1.
    std::string str() const;
    // Human-oriented: numerator over a product of factors.
    std::string pretty() const;

private:
    LaurentPoly num_;
    std::vector<DenFactor> den_;

    void add_factor(LaurentPoly p, int mult);
    void reduce();
};

// Cancels factors of den against num in place.
void cancel_factors(LaurentPoly& num, std::vector<DenFactor>& den);

} // namespace th
