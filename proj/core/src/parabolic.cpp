#include "twisted_hecke/parabolic.hpp"

#include <algorithm>
#include <set>

#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

IVec neg(IVec v) {
    for (long& c : v) c = -c;
    return v;
}

// Positive roots in the span of the simple roots in P, by closing under s_p.
std::set<IVec> levi_roots(const WeylGroup& W, const std::vector<int>& P) {
    const RootSystem& rs = W.system();
    std::set<IVec> out;
    std::vector<IVec> frontier;
    for (int p : P) {
        out.insert(rs.simple_root(p));
        frontier.push_back(rs.simple_root(p));
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& b : frontier)
            for (int p : P) {
                IVec c = W.act(W.simple(p), b);
                if (!rs.is_positive_root(c)) c = neg(c);
                if (out.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

Parabolic::Parabolic(WeylPtr W, std::vector<int> P) : W_(std::move(W)), P_(std::move(P)) {
    std::sort(P_.begin(), P_.end());
    P_.erase(std::unique(P_.begin(), P_.end()), P_.end());
    for (int p : P_)
        if (p < 1 || p > W_->rank()) throw Error(ErrorCode::IndexOutOfRange, "parabolic generator " + std::to_string(p));
    const int n = W_->size();
    std::vector<int> rep(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
        int x = w;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int p : P_)
                if (W_->length(W_->rmul(x, p)) < W_->length(x)) {
                    x = W_->rmul(x, p);
                    moved = true;
                }
        }
        rep[static_cast<std::size_t>(w)] = x;
    }
    for (int w = 0; w < n; ++w)
        if (rep[static_cast<std::size_t>(w)] == w) reps_.push_back(w);
    std::stable_sort(reps_.begin(), reps_.end(), [&](int a, int b) { return W_->length(a) < W_->length(b); });
    coset_.assign(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < n; ++w) {
        auto it = std::find(reps_.begin(), reps_.end(), rep[static_cast<std::size_t>(w)]);
        coset_[static_cast<std::size_t>(w)] = static_cast<int>(it - reps_.begin());
    }
    std::set<IVec> levi = levi_roots(*W_, P_);
    for (const IVec& a : W_->system().positive_roots())
        if (!levi.count(a)) roots_.push_back(a);
}

RatFunc Parabolic::euler(int c) const {
    const int w = reps_[static_cast<std::size_t>(c)];
    RatFunc e(1);
    for (const IVec& a : roots_) e *= one_minus(W_->system().exp_monomial(W_->act(w, a), Family::t));
    return e;
}

bool Parabolic::is_invariant(const Weight& lambda) const {
    for (int p : P_)
        if (!W_->system().pairing(lambda, p).is_zero()) return false;
    return true;
}

std::string Parabolic::format_coset(int c) const { return W_->format(reps_[static_cast<std::size_t>(c)]) + "W_P"; }

std::vector<std::vector<int>> maximal_parabolics(const WeylGroup& W) {
    std::vector<std::vector<int>> out;
    for (int skip = 1; skip <= W.rank(); ++skip) {
        std::vector<int> P;
        for (int i = 1; i <= W.rank(); ++i)
            if (i != skip) P.push_back(i);
        out.push_back(P);
    }
    return out;
}

std::vector<int> minimal_reps(const WeylPtr& W, const std::vector<int>& P) { return Parabolic(W, P).reps(); }

CosetClass pushforward(const Parabolic& GP, const LocalizedClass& xi) {
    const WeylGroup& W = *GP.group();
    CosetClass out(static_cast<std::size_t>(GP.size()));
    for (int sigma = 0; sigma < W.size(); ++sigma) {
        if (xi[sigma].is_zero()) continue;
        const int c = GP.coset_of(sigma);
        // divide factor by factor so the denominator stays a product of binomials
        RatFunc v = xi[sigma] * GP.euler(c);
        for (const IVec& a : W.system().positive_roots())
            v /= one_minus(W.system().exp_monomial(W.act(sigma, a), Family::t));
        out[static_cast<std::size_t>(c)] += v;
    }
    return out;
}

CosetClass mc_coset(const Parabolic& GP, int w, const Weight& lambda) {
    if (!GP.is_invariant(lambda))
        throw Error(ErrorCode::SlopeNotInvariant, "slope " + format_weight(lambda) + " is not W_P-invariant");
    if (!GP.is_min_rep(w))
        throw Error(ErrorCode::NotMinimalRep, GP.group()->format(w) + " is not a minimal representative");
    return pushforward(GP, mc_cell(GP.group(), w, lambda));
}

CosetClass dl_left_coset_a(const Parabolic& GP, int s, const QRat& a, const CosetClass& xi) {
    const WeylGroup& W = *GP.group();
    const RootSystem& rs = W.system();
    if (s < 1 || s > W.rank()) throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(s));
    const int c = static_cast<int>(ceil_q(a));
    const Monomial A = rs.exp_monomial(neg(rs.simple_root(s)), Family::t);
    const RatFunc y = y_var();
    const RatFunc cs = one_plus(y, A) / one_minus(A);
    const RatFunc cid = (RatFunc(1) + y) * RatFunc::monomial(A.pow(c)) / one_minus(A);
    CosetClass out(xi.size());
    for (int k = 0; k < GP.size(); ++k) {
        const int other = GP.coset_of(W.lmul(s, GP.reps()[static_cast<std::size_t>(k)]));
        out[static_cast<std::size_t>(k)] =
            cs * act_family(W, W.simple(s), Family::t, xi[static_cast<std::size_t>(other)]) - cid * xi[static_cast<std::size_t>(k)];
    }
    return out;
}

CosetClass dl_left_coset(const Parabolic& GP, int s, const Weight& lambda, const CosetClass& xi) {
    return dl_left_coset_a(GP, s, GP.group()->system().pairing(lambda, s), xi);
}

bool coset_equal(const CosetClass& a, const CosetClass& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k] == b[k])) return false;
    return true;
}

DeodharCase deodhar_case(const Parabolic& GP, int s, int w) {
    const WeylGroup& W = *GP.group();
    const int sw = W.lmul(s, w);
    if (W.length(sw) < W.length(w)) return DeodharCase::Shorter;
    return GP.is_min_rep(sw) ? DeodharCase::LongerInWP : DeodharCase::SameCoset;
}

LeftActionReport left_action_check(const Parabolic& GP, int s, int w, const Weight& lambda) {
    const WeylPtr& W = GP.group();
    const int sw = W->lmul(s, w);
    CosetClass here = mc_coset(GP, w, lambda);
    CosetClass lhs = dl_left_coset(GP, s, W->act(w, lambda), here);
    CosetClass target = mc_coset(GP, GP.rep_of(sw), lambda);
    const RatFunc my = -y_var();

    LeftActionReport r;
    r.kind = deodhar_case(GP, s, w);
    CosetClass expect = target;
    if (r.kind != DeodharCase::LongerInWP)
        for (RatFunc& f : expect) f *= my;
    r.proposition_ok = coset_equal(lhs, expect);

    r.summary_exponent = GP.coset_dim(w) - GP.coset_dim(sw) + 1;
    CosetClass summary = target;
    const RatFunc factor = my.pow(r.summary_exponent);
    for (RatFunc& f : summary) f *= factor;
    r.summary_ok = coset_equal(lhs, summary);
    if (!r.proposition_ok || !r.summary_ok)
        r.detail = "s" + std::to_string(s) + " w=" + W->format(w) + " case " + std::to_string(static_cast<int>(r.kind)) +
                   (r.proposition_ok ? "" : " proposition fails") +
                   (r.summary_ok ? "" : " summary exponent " + std::to_string(r.summary_exponent) + " fails");
    const CosetClass& rhs = r.proposition_ok ? summary : expect;
    for (int c = 0; c < GP.size() && !r.detail.empty(); ++c)
        if (!(lhs[static_cast<std::size_t>(c)] == rhs[static_cast<std::size_t>(c)])) {
            r.detail += "; at " + GP.format_coset(c) + ": " + lhs[static_cast<std::size_t>(c)].str() + " vs " +
                        rhs[static_cast<std::size_t>(c)].str();
            break;
        }
    return r;
}

bool fibration_check(const WeylPtr& W, int s) {
    Parabolic GP(W, {s});
    const RootSystem& rs = W->system();
    LocalizedClass xi(W);
    for (int sigma = 0; sigma < W->size(); ++sigma)
        xi[sigma] = one_plus(y_var(), rs.exp_monomial(W->act(sigma, rs.simple_root(s)), Family::t));
    CosetClass p = pushforward(GP, xi);
    for (const RatFunc& f : p)
        if (!(f == RatFunc(1) - y_var())) return false;
    return true;
}

} // namespace th
