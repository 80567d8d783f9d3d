#pragma once

// Twisted motivic classes of matrix Schubert cells in GL_n, as rational
// functions in x (the torus acting on the right) and t (on the left).
//
//   B = (1+y)^n prod_{i<j} (1 + y x_j/x_i)
//   E = prod_{i,j} (1 - x_j/t_i)
//   mC~(id, lambda) = prod_i (1+y)(x_i/t_i)^{1-ceil(lambda_i)}
//                     * prod_{i<j} (1 + y x_j/t_i) * prod_{j<i} (1 - x_j/t_i)
//
// Left recursion:  mC~(s_i w, lambda) = Tcl_i(w lambda) mC~(w, lambda)
// Right recursion: mC~(w s_i, s_i lambda) = B Tcr_i(lambda) B^-1 mC~(w, lambda)
// The Kirwan map kappa_sigma sends x_i to t_{sigma(i)} and recovers the
// localized flag class: kappa(B^-1 mC~(w, lambda)) = mC(w, lambda).

#include <string>
#include <vector>

#include "twisted_hecke/flagk.hpp"
#include "twisted_hecke/wallcross.hpp"

namespace th {

RatFunc bb_factor(int n);
RatFunc ee_factor(int n);
RatFunc mc_matrix_id(int n, const Weight& lambda);

// How w acts on a slope in the left recursion parameter w lambda.
// Linear: (w lambda)_k = lambda_{w^-1(k)}. PermutedIndex: (lambda_{w(1)}, ..., lambda_{w(n)}).
enum class SlopeConvention { Linear, PermutedIndex };
Weight act_slope(const WeylGroup& W, int w, const Weight& lambda, SlopeConvention conv);

// mC~(w, lambda) along the normal form of w (or the given reduced word).
RatFunc mc_matrix(const WeylPtr& W, int w, const Weight& lambda, Route route = Route::Left,
                  SlopeConvention conv = SlopeConvention::Linear);
RatFunc mc_matrix_word(const WeylPtr& W, const Word& word, const Weight& lambda, Route route = Route::Left,
                       SlopeConvention conv = SlopeConvention::Linear);

// x_i -> t_{sigma(i)}; throws DenominatorVanishes if a denominator dies.
RatFunc kirwan_restrict(const WeylGroup& W, const RatFunc& f, int sigma);
LocalizedClass kirwan(const WeylPtr& W, const RatFunc& f);

// kappa(B^-1 mC~(w, lambda)) against the flag class, both routes.
CheckResult verify_kirwan_division(const WeylPtr& W, int w, const Weight& lambda, Route route);

// kappa o Tcr_i(lambda) = T_{s_i, lambda} o kappa and
// kappa o Tcl_i(lambda) = T^L_{s_i, lambda} o kappa on f.
CheckResult lift_check(const WeylPtr& W, int i, const Weight& lambda, const RatFunc& f);
// Test functions: x^a t^b with every exponent in {-1, 0, 1}.
std::vector<RatFunc> lift_test_monomials(int n);

// B^-1 Tcrr_i(lambda)(f) = Tcr_i(lambda)(B^-1 f): the hat and plain right
// operators are conjugate by B.
CheckResult conjugation_check(const WeylPtr& W, int i, const Weight& lambda, const RatFunc& f);

} // namespace th
