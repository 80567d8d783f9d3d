#pragma once

// Identities relating twisted classes at different slopes and chambers, plus
// the class-level quadratic and anti-ample checks.

#include <string>
#include <vector>

#include "twisted_hecke/flagk.hpp"

namespace th {

struct CheckResult {
    bool ok = true;
    std::string detail; // first counterexample, empty when ok
};

enum class WallRelation { SameAlcove, Adjacent };

// Slope wall-crossing for mC(w, -) between lambda1 and lambda2.
// Either both slopes share an alcove (constancy), or they sit in alcoves
// separated only by H_{alpha,0} with <lambda2, alpha^vee> in (0, 1).
// Throws NotAdjacent otherwise.
WallRelation classify_wall(const WeylGroup& W, const IVec& alpha, const Weight& lambda1, const Weight& lambda2);
CheckResult wallcross_slope_check(const WeylPtr& W, int w, const IVec& alpha, const Weight& lambda1,
                                  const Weight& lambda2);

// A pair of slopes mu -+ eps*alpha around a point mu on H_{alpha,0} whose
// other pairings are away from the integers.
std::pair<Weight, Weight> slopes_across(const WeylGroup& W, const IVec& alpha, const Weight& mu, const QRat& eps);

// stab_{sigma C+}(v) = sigma^L stab(sigma^-1 v) for all v, at one slope.
std::vector<LocalizedClass> chamber_stabs(const WeylPtr& W, int sigma, const Weight& lambda);
// Chamber wall-crossing identity for (w, sigma, s) at a generic slope.
CheckResult wallcross_chamber_check(const WeylPtr& W, int w, int sigma, int s, const Weight& lambda);

// T_{s,lambda} o T_{s,s lambda} on xi: -y xi for generic pairing, and
// -y xi - (1+y) L^{-<lambda,alpha_s^vee>} T_{s,s lambda}(xi) when the pairing is integral.
CheckResult quadratic_on_class(int s, const Weight& lambda, const LocalizedClass& xi);
// Same for the left operators: T^L_{s, s lambda} o T^L_{s, lambda} = -y.
CheckResult quadratic_left_on_class(int s, const Weight& lambda, const LocalizedClass& xi);

// A small anti-ample slope: <lambda, alpha^vee> in (-1, 0) for every alpha > 0.
Weight small_anti_ample(const WeylGroup& W);
bool is_small_anti_ample(const WeylGroup& W, const Weight& lambda);
// Applying T_{w^-1} letter by letter at slope w lambda: every step must use the
// untwisted branch, and the result must be h^{l(w)} stab^lambda(w' w).
CheckResult antiample_check(const WeylPtr& W, int wprime, int w, const Weight& lambda_minus);

// mC(w, lambda + mu) = e^{w mu} L(mu) mC(w, lambda) for integral mu.
CheckResult periodicity_check(const WeylPtr& W, int w, const Weight& lambda, const Weight& mu);

} // namespace th
