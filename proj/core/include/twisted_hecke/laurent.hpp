#pragma once

// Sparse Laurent polynomials over Q in the fixed variable universe.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twisted_hecke/monomial.hpp"
#include "twisted_hecke/qrat.hpp"

namespace th {

struct Term {
    Monomial mono;
    QRat coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const QRat& c);
    LaurentPoly(long c) : LaurentPoly(QRat(c)) {}
    LaurentPoly(int c) : LaurentPoly(QRat(c)) {}
    static LaurentPoly term(const QRat& c, const Monomial& m);
    static LaurentPoly monomial(const Monomial& m) { return term(QRat(1), m); }
    static LaurentPoly var(VarId v, int power = 1) { return monomial(Monomial::var(v, power)); }
    // Terms need not be sorted or combined.
    static LaurentPoly from_terms(std::vector<Term> terms);

    // Ascending in the monomial order; no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Single nonzero term.
    bool is_term() const { return terms_.size() == 1; }
    QRat constant_coeff() const;

    const Term& leading() const { return terms_.back(); }
    const Term& trailing() const { return terms_.front(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const QRat& c) const;
    LaurentPoly shifted(const Monomial& m) const;
    LaurentPoly times_term(const QRat& c, const Monomial& m) const;
    LaurentPoly pow(unsigned k) const;

    // Applies a monomial map termwise; equal images are combined.
    LaurentPoly map_monomials(const std::function<Monomial(const Monomial&)>& f) const;
    // Applies a map sending each monomial to a scalar multiple of a monomial.
    LaurentPoly map_terms(const std::function<Term(const Monomial&)>& f) const;

    // Exact quotient by (1 + c*m), m != 1, or nullopt if it does not divide.
    std::optional<LaurentPoly> divide_binomial(const QRat& c, const Monomial& m) const;
    // Exact quotient by an arbitrary nonzero divisor, or nullopt.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& g) const;

    // Divides out the least monomial and scales so the least term is 1.
    // Returns the unit (coefficient, monomial) that was removed.
    Term normalize_unit();

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    // Total order used to sort factor lists deterministically.
    friend bool poly_less(const LaurentPoly& a, const LaurentPoly& b);

    std::size_t hash() const;
    // Descending terms: "3*t1^1*t2^-1 + -1*y^1"; "0" for zero.
    std::string str() const;

private:
    std::vector<Term> terms_;
    void canonicalize_terms();
};

// (1 - L^n)/(1 - L) as a Laurent polynomial.
LaurentPoly exact_div_geom(long n, const Monomial& L);

} // namespace th
