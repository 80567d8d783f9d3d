#pragma once

// Localized T-equivariant K-theory of G/B: a class is its tuple of
// restrictions to the fixed points sigma in W, each a rational function in
// the t-family and y (or h after y -> -h^2).
//
// Conventions, fixed by the GL_2 data point:
//   eu(T_sigma G/B) = prod_{alpha > 0} (1 - e^{sigma alpha})
//   L_s|sigma       = e^{-sigma alpha_s}
//   L(mu)|sigma     = e^{-sigma mu}

#include <optional>
#include <string>
#include <vector>

#include "twisted_hecke/characters.hpp"

namespace th {

class LocalizedClass {
public:
    explicit LocalizedClass(WeylPtr W);

    const WeylPtr& group() const { return W_; }
    const WeylGroup& weyl() const { return *W_; }
    int size() const { return static_cast<int>(r_.size()); }
    const RatFunc& operator[](int sigma) const { return r_[static_cast<std::size_t>(sigma)]; }
    RatFunc& operator[](int sigma) { return r_[static_cast<std::size_t>(sigma)]; }
    const std::vector<RatFunc>& restrictions() const { return r_; }

    LocalizedClass& operator+=(const LocalizedClass& o);
    LocalizedClass& operator-=(const LocalizedClass& o);
    friend LocalizedClass operator+(LocalizedClass a, const LocalizedClass& b) { return a += b; }
    friend LocalizedClass operator-(LocalizedClass a, const LocalizedClass& b) { return a -= b; }
    LocalizedClass scaled(const RatFunc& c) const;
    // Pointwise product with a class.
    LocalizedClass times(const LocalizedClass& o) const;

    bool is_zero() const;
    friend bool operator==(const LocalizedClass& a, const LocalizedClass& b);

    LocalizedClass substitute_y(const RatFunc& yval) const;

    // {"system":..,"slope":..,"restrictions":{"<w>":"<ratfunc>",...}}
    std::string to_json(const std::string& slope) const;
    // One line per fixed point, "w: f".
    std::string to_text() const;

private:
    WeylPtr W_;
    std::vector<RatFunc> r_;
};

// Tangent data.
RatFunc euler_class(const WeylGroup& W, int sigma);
Monomial line_L(const WeylGroup& W, int s, int sigma); // L_s|sigma
// e^{-sigma mu}; mu must be integral.
Monomial line_of_weight(const WeylGroup& W, const Weight& mu, int sigma);

// The constant class c at every point, and the class with L(mu) restrictions.
LocalizedClass constant_class(const WeylPtr& W, const RatFunc& c);
LocalizedClass line_class(const WeylPtr& W, const Weight& mu);

// Class of the point cell: eu(T_id) at id, zero elsewhere.
LocalizedClass mc_point(const WeylPtr& W);

// Twisted Demazure-Lusztig operators on localized classes.
// The a-forms take the raw operator parameter; the weight forms resolve it as
// a = -<lambda, alpha_s^vee> (right) or a = <lambda, alpha_s^vee> (left).
// yval is substituted for y in the coefficients (use -h^2 for stable envelopes).
LocalizedClass dl_right_a(int s, const QRat& a, const LocalizedClass& xi, const RatFunc& yval);
LocalizedClass dl_left_a(int s, const QRat& a, const LocalizedClass& xi, const RatFunc& yval);
LocalizedClass dl_right(int s, const Weight& lambda, const LocalizedClass& xi);
LocalizedClass dl_left(int s, const Weight& lambda, const LocalizedClass& xi);
LocalizedClass dl_right(int s, const Weight& lambda, const LocalizedClass& xi, const RatFunc& yval);
LocalizedClass dl_left(int s, const Weight& lambda, const LocalizedClass& xi, const RatFunc& yval);

RatFunc y_var();
RatFunc h_var();
RatFunc minus_h2(); // the value substituted for y

enum class Route { Right, Left };

struct RouteSpec {
    Route route = Route::Right;
    std::optional<Word> word; // default: normal form of w
};

// Slopes at which the right recursion applies each letter: entry j-1 is
// s_{i_j} ... s_{i_l} lambda, so that the result sits at slope lambda.
std::vector<Weight> right_slopes(const WeylGroup& W, const Word& word, const Weight& lambda);
// Parameters for the left recursion: entry j-1 is w_{>j} lambda.
std::vector<Weight> left_slopes(const WeylGroup& W, const Word& word, const Weight& lambda);

// mC(w, lambda) by the right or left recursion along a reduced word.
LocalizedClass mc_cell(const WeylPtr& W, int w, const Weight& lambda, const RouteSpec& route = {});
LocalizedClass mc_cell(const WeylPtr& W, int w, const Weight& lambda, Route route);

// h^{-l(w)} mC(w, lambda)|_{y=-h^2}; lambda must be generic.
LocalizedClass stable_envelope(const WeylPtr& W, int w, const Weight& lambda, Route route = Route::Right);
// Same normalization applied to an already computed mC class.
LocalizedClass normalize_stab(const LocalizedClass& mc, int length);

// (sigma^L xi)|tau = sigma(xi|_{sigma^-1 tau}), sigma acting on t.
LocalizedClass left_translate(int sigma, const LocalizedClass& xi);
// (sigma^R xi)|tau = xi|_{tau sigma}
LocalizedClass right_translate(int sigma, const LocalizedClass& xi);

// Multiplication by the line bundle L(mu).
LocalizedClass periodicity_shift(const LocalizedClass& xi, const Weight& mu);

// (-y)^k, throwing NonIntegralExponent when 2k is odd.
RatFunc minus_y_pow_half(int twice_k, const RatFunc& yval);

// Fixed points where xi is nonzero but sigma is not below w in Bruhat order.
std::vector<int> support_violations(const LocalizedClass& xi, int w);

} // namespace th
