#include "twisted_hecke/wallcross.hpp"

#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

bool same_root(const IVec& a, const IVec& b) { return a == b; }

std::string first_diff(const LocalizedClass& a, const LocalizedClass& b) {
    for (int s = 0; s < a.size(); ++s)
        if (!(a[s] == b[s]))
            return "at " + a.weyl().format(s) + ": lhs " + a[s].str() + " rhs " + b[s].str();
    return {};
}

CheckResult compare(const LocalizedClass& a, const LocalizedClass& b, const std::string& what) {
    CheckResult r;
    std::string d = first_diff(a, b);
    if (!d.empty()) {
        r.ok = false;
        r.detail = what + " " + d;
    }
    return r;
}

IVec neg(IVec v) {
    for (long& c : v) c = -c;
    return v;
}

} // namespace

WallRelation classify_wall(const WeylGroup& W, const IVec& alpha, const Weight& l1, const Weight& l2) {
    const RootSystem& rs = W.system();
    rs.check_weight(l1);
    rs.check_weight(l2);
    if (!rs.is_root(alpha) || !rs.is_positive_root(alpha))
        throw Error(ErrorCode::InvalidInput, "wall root must be a positive root");
    if (rs.same_alcove(l1, l2)) return WallRelation::SameAlcove;
    for (const IVec& b : rs.positive_roots()) {
        QRat p1 = rs.pairing(l1, b), p2 = rs.pairing(l2, b);
        if (same_root(b, alpha)) {
            if (!(p1 > QRat(-1) && p1 < QRat(0) && p2 > QRat(0) && p2 < QRat(1)))
                throw Error(ErrorCode::NotAdjacent, "slopes are not on the two sides of H_{alpha,0}");
            continue;
        }
        if (p1.is_integer() || p2.is_integer() || ceil_q(p1) != ceil_q(p2))
            throw Error(ErrorCode::NotAdjacent, "slopes differ across another wall");
    }
    return WallRelation::Adjacent;
}

std::pair<Weight, Weight> slopes_across(const WeylGroup& W, const IVec& alpha, const Weight& mu, const QRat& eps) {
    if (!W.system().pairing(mu, alpha).is_zero()) throw Error(ErrorCode::InvalidInput, "mu is not on H_{alpha,0}");
    // <alpha, alpha^vee> = 2, so this moves the alpha-pairing by -+eps
    Weight d = (eps / QRat(2)) * to_weight(alpha);
    return {mu - d, mu + d};
}

CheckResult wallcross_slope_check(const WeylPtr& W, int w, const IVec& alpha, const Weight& l1, const Weight& l2) {
    WallRelation rel = classify_wall(*W, alpha, l1, l2);
    LocalizedClass c1 = mc_cell(W, w, l1);
    LocalizedClass c2 = mc_cell(W, w, l2);
    if (rel == WallRelation::SameAlcove) return compare(c1, c2, "alcove constancy");
    const int sa = W->reflection(alpha);
    const int wsa = W->mul(w, sa);
    if (W->length(wsa) > W->length(w)) return compare(c1, c2, "plain crossing");
    const RatFunc y = y_var();
    RatFunc coeff = minus_y_pow_half(W->length(w) - W->length(wsa) - 1, y) * (RatFunc(1) + y);
    LocalizedClass rhs = c2 - mc_cell(W, wsa, l2).scaled(coeff);
    return compare(c1, rhs, "corrected crossing");
}

std::vector<LocalizedClass> chamber_stabs(const WeylPtr& W, int sigma, const Weight& lambda) {
    std::vector<LocalizedClass> out;
    const int si = W->inverse(sigma);
    for (int v = 0; v < W->size(); ++v)
        out.push_back(left_translate(sigma, stable_envelope(W, W->mul(si, v), lambda)));
    return out;
}

CheckResult wallcross_chamber_check(const WeylPtr& W, int w, int sigma, int s, const Weight& lambda) {
    const RootSystem& rs = W->system();
    if (!rs.is_generic(lambda))
        throw Error(ErrorCode::NonGenericSlope, "slope " + format_weight(lambda) + " lies on a wall");
    const int ss = W->simple(s);
    const int sigma_s = W->mul(sigma, ss);
    const int si = W->inverse(sigma);
    auto stab_in = [&](int chamber, int v) {
        return left_translate(chamber, stable_envelope(W, W->mul(W->inverse(chamber), v), lambda));
    };
    const IVec beta = W->act(sigma, rs.simple_root(s)); // sigma alpha_s
    const long k = floor_q(rs.pairing(W->act(w, lambda), beta));
    const RatFunc h = h_var();
    const RatFunc h2 = h * h;
    const Monomial eb = rs.exp_monomial(beta, Family::t);
    const Monomial emb = rs.exp_monomial(neg(beta), Family::t);
    const RatFunc den = RatFunc(1) - h2 * RatFunc::monomial(emb);
    const RatFunc c1 = (RatFunc(1) - h2) * RatFunc::monomial(eb.pow(static_cast<int>(k))) / den;
    const RatFunc c2 = h * one_minus(emb) / den;
    const int other = W->mul(W->mul(W->mul(sigma, ss), si), w);
    LocalizedClass lhs = stab_in(sigma_s, w);
    LocalizedClass rhs = stab_in(sigma, other).scaled(c1) + stab_in(sigma, w).scaled(c2);
    return compare(lhs, rhs, "chamber crossing");
}

CheckResult quadratic_on_class(int s, const Weight& lambda, const LocalizedClass& xi) {
    const WeylGroup& W = xi.weyl();
    const RootSystem& rs = W.system();
    const Weight sl = W.act(W.simple(s), lambda);
    LocalizedClass inner = dl_right(s, sl, xi);
    LocalizedClass lhs = dl_right(s, lambda, inner);
    const RatFunc y = y_var();
    LocalizedClass rhs = xi.scaled(-y);
    const QRat p = rs.pairing(lambda, s);
    if (p.is_integer()) {
        LocalizedClass L(xi.group());
        for (int sigma = 0; sigma < W.size(); ++sigma)
            L[sigma] = RatFunc::monomial(line_L(W, s, sigma).pow(static_cast<int>(-p.to_long())));
        rhs -= L.times(inner).scaled(RatFunc(1) + y);
    }
    return compare(lhs, rhs, "quadratic");
}

CheckResult quadratic_left_on_class(int s, const Weight& lambda, const LocalizedClass& xi) {
    const WeylGroup& W = xi.weyl();
    if (!W.system().pairing(lambda, s).is_integer()) {
        const Weight sl = W.act(W.simple(s), lambda);
        return compare(dl_left(s, sl, dl_left(s, lambda, xi)), xi.scaled(-y_var()), "left quadratic");
    }
    // integral pairing a: the parameters a and 1 - a
    const QRat a = W.system().pairing(lambda, s);
    LocalizedClass lhs = dl_left_a(s, QRat(1) - a, dl_left_a(s, a, xi, y_var()), y_var());
    return compare(lhs, xi.scaled(-y_var()), "left quadratic");
}

Weight small_anti_ample(const WeylGroup& W) {
    const RootSystem& rs = W.system();
    IVec two_rho(static_cast<std::size_t>(rs.dim()), 0);
    for (const IVec& a : rs.positive_roots())
        for (int k = 0; k < rs.dim(); ++k) two_rho[k] += a[k];
    Weight r = to_weight(two_rho);
    QRat m(0);
    for (const IVec& a : rs.positive_roots()) m = std::max(m, rs.pairing(r, a));
    return (QRat(-1) / (m + QRat(1))) * r;
}

bool is_small_anti_ample(const WeylGroup& W, const Weight& lambda) {
    const RootSystem& rs = W.system();
    for (const IVec& a : rs.positive_roots()) {
        QRat p = rs.pairing(lambda, a);
        if (!(p > QRat(-1) && p < QRat(0))) return false;
    }
    return true;
}

CheckResult antiample_check(const WeylPtr& W, int wprime, int w, const Weight& lm) {
    if (!is_small_anti_ample(*W, lm)) throw Error(ErrorCode::InvalidInput, "slope is not small anti-ample");
    const int target = W->mul(wprime, w);
    if (W->length(target) != W->length(wprime) + W->length(w))
        throw Error(ErrorCode::InvalidInput, "lengths do not add");
    const Word word = W->normal_form(w);
    std::vector<Weight> mu = right_slopes(*W, word, lm);
    LocalizedClass x = stable_envelope(W, wprime, W->act(w, lm));
    for (std::size_t j = 0; j < word.size(); ++j) {
        const long c = ceil_q(-W->system().pairing(mu[j], word[j]));
        if (c != 0) return {false, "letter " + std::to_string(j + 1) + " uses ceiling " + std::to_string(c)};
        x = dl_right_a(word[j], QRat(0), x, minus_h2());
    }
    LocalizedClass rhs = stable_envelope(W, target, lm).scaled(RatFunc::var(h_(), W->length(w)));
    return compare(x, rhs, "anti-ample recursion");
}

CheckResult periodicity_check(const WeylPtr& W, int w, const Weight& lambda, const Weight& mu) {
    LocalizedClass shifted = mc_cell(W, w, lambda + mu);
    const RatFunc ewmu = RatFunc::monomial(line_of_weight(*W, mu, w).inverse());
    LocalizedClass rhs = periodicity_shift(mc_cell(W, w, lambda), mu).scaled(ewmu);
    return compare(shifted, rhs, "periodicity");
}

} // namespace th
