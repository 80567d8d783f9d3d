#pragma once

// Partial flag varieties G/P. Fixed points are cosets w W_P, indexed by their
// minimal length representatives. Classes on G/P are restriction tuples over
// the cosets, and pi_* : G/B -> G/P is computed by localization:
//   pi_* xi |_c = sum_{sigma in c} xi|_sigma * eu(T_c G/P) / eu(T_sigma G/B)
// with eu(T_c G/P) = prod_{alpha in R+ \ R+_P} (1 - e^{w alpha}), w the
// minimal representative of c.

#include <string>
#include <vector>

#include "twisted_hecke/flagk.hpp"

namespace th {

class Parabolic {
public:
    // P lists the simple reflections generating W_P.
    Parabolic(WeylPtr W, std::vector<int> P);

    const WeylPtr& group() const { return W_; }
    const std::vector<int>& generators() const { return P_; }
    // Minimal representatives, ordered by length and then index.
    const std::vector<int>& reps() const { return reps_; }
    int size() const { return static_cast<int>(reps_.size()); }
    int coset_of(int w) const { return coset_[static_cast<std::size_t>(w)]; } // position in reps()
    int rep_of(int w) const { return reps_[static_cast<std::size_t>(coset_of(w))]; }
    bool is_min_rep(int w) const { return rep_of(w) == w; }
    bool in_WP(int w) const { return coset_of(w) == coset_of(0); }
    // dim X^P_{w W_P} = l(minimal representative)
    int coset_dim(int w) const { return W_->length(rep_of(w)); }

    RatFunc euler(int c) const;
    // lambda is W_P-invariant: <lambda, alpha_p^vee> = 0 for p in P.
    bool is_invariant(const Weight& lambda) const;
    std::string format_coset(int c) const;

private:
    WeylPtr W_;
    std::vector<int> P_;
    std::vector<int> reps_, coset_;
    std::vector<IVec> roots_; // R+ \ R+_P
};

// Restrictions indexed by position in Parabolic::reps().
using CosetClass = std::vector<RatFunc>;

// The subsets of simple reflections giving the maximal parabolics.
std::vector<std::vector<int>> maximal_parabolics(const WeylGroup& W);
std::vector<int> minimal_reps(const WeylPtr& W, const std::vector<int>& P);

CosetClass pushforward(const Parabolic& GP, const LocalizedClass& xi);
// mC(w W_P, lambda) = pi_* mC(w, lambda); w in W^P, lambda W_P-invariant.
CosetClass mc_coset(const Parabolic& GP, int w, const Weight& lambda);
// Left operator T^L_{s,a} on coset classes, a = <lambda, alpha_s^vee> for the weight form.
CosetClass dl_left_coset_a(const Parabolic& GP, int s, const QRat& a, const CosetClass& xi);
CosetClass dl_left_coset(const Parabolic& GP, int s, const Weight& lambda, const CosetClass& xi);
bool coset_equal(const CosetClass& a, const CosetClass& b);

enum class DeodharCase { Shorter = 1, LongerInWP = 2, SameCoset = 3 };
DeodharCase deodhar_case(const Parabolic& GP, int s, int w);

struct LeftActionReport {
    DeodharCase kind;
    bool proposition_ok;      // -y, 1, -y in the three cases
    int summary_exponent;     // dim X^P_w - dim X^P_{sw} + 1
    bool summary_ok;          // T^L = (-y)^{summary_exponent} mC(sw W_P)
    std::string detail;
};
// T^L_{s, w lambda}(mC(w W_P, lambda)) against the three propositions and the
// summary formula.
LeftActionReport left_action_check(const Parabolic& GP, int s, int w, const Weight& lambda);

// pi_*(1 + y L*_s) = 1 - y for the minimal parabolic of s, where L*|sigma = e^{sigma alpha_s}.
bool fibration_check(const WeylPtr& W, int s);

} // namespace th
