#include "twisted_hecke/matschub.hpp"

#include "twisted_hecke/dloper.hpp"
#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

RatFunc xt(int xi, int ti) { return RatFunc::monomial(Monomial::var(x_(xi)) / Monomial::var(t_(ti))); }
RatFunc xx(int a, int b) { return RatFunc::monomial(Monomial::var(x_(a)) / Monomial::var(x_(b))); }

void check_type_a(const WeylGroup& W) {
    if (W.system().kind() != RootKind::A) throw Error(ErrorCode::WrongType, "matrix Schubert classes need type A");
}

std::string first_diff(const LocalizedClass& a, const LocalizedClass& b, const std::string& what) {
    for (int s = 0; s < a.size(); ++s)
        if (!(a[s] == b[s])) return what + " at " + a.weyl().format(s) + ": " + a[s].str() + " vs " + b[s].str();
    return {};
}

} // namespace

RatFunc bb_factor(int n) {
    const RatFunc y = y_var();
    RatFunc b = (RatFunc(1) + y).pow(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b *= RatFunc(1) + y * xx(j, i);
    return b;
}

RatFunc ee_factor(int n) {
    RatFunc e(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) e *= RatFunc(1) - xt(j, i);
    return e;
}

RatFunc mc_matrix_id(int n, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != n) throw Error(ErrorCode::RankMismatch, "slope has the wrong length");
    const RatFunc y = y_var();
    RatFunc c(1);
    for (int i = 1; i <= n; ++i) {
        c *= (RatFunc(1) + y) * xt(i, i).pow(static_cast<int>(1 - ceil_q(lambda[static_cast<std::size_t>(i - 1)])));
        for (int j = 1; j <= n; ++j) {
            if (i < j) c *= RatFunc(1) + y * xt(j, i);
            if (j < i) c *= RatFunc(1) - xt(j, i);
        }
    }
    return c;
}

Weight act_slope(const WeylGroup& W, int w, const Weight& lambda, SlopeConvention conv) {
    if (conv == SlopeConvention::Linear) return W.act(w, lambda);
    check_type_a(W);
    const std::vector<int> p = W.one_line(w);
    Weight out(lambda.size());
    for (std::size_t k = 0; k < lambda.size(); ++k) out[k] = lambda[static_cast<std::size_t>(p[k] - 1)];
    return out;
}

RatFunc mc_matrix_word(const WeylPtr& W, const Word& word, const Weight& lambda, Route route, SlopeConvention conv) {
    check_type_a(*W);
    W->system().check_weight(lambda);
    if (!W->is_reduced(word)) throw Error(ErrorCode::NonReducedWord, "word " + W->format_word(word) + " is not reduced");
    const int n = W->system().dim();
    if (route == Route::Left) {
        RatFunc c = mc_matrix_id(n, lambda);
        int v = W->identity();
        for (std::size_t j = word.size(); j-- > 0;) {
            c = make_Tcl(W, word[j], act_slope(*W, v, lambda, conv)).apply(c);
            v = W->lmul(word[j], v);
        }
        return c;
    }
    const std::vector<Weight> mu = right_slopes(*W, word, lambda);
    const Weight start = word.empty() ? lambda : mu.front();
    const RatFunc B = bb_factor(n);
    RatFunc c = mc_matrix_id(n, start) / B;
    for (std::size_t j = 0; j < word.size(); ++j) c = make_Tcr(W, word[j], mu[j]).apply(c);
    return c * B;
}

RatFunc mc_matrix(const WeylPtr& W, int w, const Weight& lambda, Route route, SlopeConvention conv) {
    return mc_matrix_word(W, W->normal_form(w), lambda, route, conv);
}

RatFunc kirwan_restrict(const WeylGroup& W, const RatFunc& f, int sigma) {
    check_type_a(W);
    const std::vector<int> p = W.one_line(sigma);
    const int n = static_cast<int>(p.size());
    return f.map_monomials([&](const Monomial& m) {
        Monomial r = m;
        for (int i = 1; i <= n; ++i) {
            const int e = m.exp(x_(i));
            if (!e) continue;
            r[x_(i).slot()] = 0;
            r[t_(p[static_cast<std::size_t>(i - 1)]).slot()] += e;
        }
        return r;
    });
}

LocalizedClass kirwan(const WeylPtr& W, const RatFunc& f) {
    LocalizedClass out(W);
    for (int sigma = 0; sigma < W->size(); ++sigma) {
        try {
            out[sigma] = kirwan_restrict(*W, f, sigma);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DenominatorVanishes) throw;
            const std::string msg = e.what();
            throw Error(ErrorCode::DenominatorVanishes, "at " + W->format(sigma) + ", " + msg.substr(msg.find(": ") + 2));
        }
    }
    return out;
}

CheckResult verify_kirwan_division(const WeylPtr& W, int w, const Weight& lambda, Route route) {
    const int n = W->system().dim();
    LocalizedClass lhs = kirwan(W, mc_matrix(W, w, lambda, route) / bb_factor(n));
    LocalizedClass rhs = mc_cell(W, w, lambda, route);
    CheckResult r;
    r.detail = first_diff(lhs, rhs, "Kirwan image");
    r.ok = r.detail.empty();
    return r;
}

CheckResult lift_check(const WeylPtr& W, int i, const Weight& lambda, const RatFunc& f) {
    LocalizedClass kf = kirwan(W, f);
    CheckResult r;
    r.detail = first_diff(kirwan(W, make_Tcr(W, i, lambda).apply(f)), dl_right(i, lambda, kf), "right lift");
    if (r.detail.empty())
        r.detail = first_diff(kirwan(W, make_Tcl(W, i, lambda).apply(f)), dl_left(i, lambda, kf), "left lift");
    r.ok = r.detail.empty();
    return r;
}

std::vector<RatFunc> lift_test_monomials(int n) {
    std::vector<RatFunc> out;
    const int vars = 2 * n;
    int total = 1;
    for (int k = 0; k < vars; ++k) total *= 3;
    for (int code = 0; code < total; ++code) {
        Monomial m;
        int c = code;
        for (int k = 0; k < vars; ++k, c /= 3) {
            const int e = c % 3 - 1;
            const VarId v = k < n ? x_(k + 1) : t_(k - n + 1);
            m[v.slot()] = static_cast<Monomial::Exp>(e);
        }
        out.push_back(RatFunc::monomial(m));
    }
    return out;
}

CheckResult conjugation_check(const WeylPtr& W, int i, const Weight& lambda, const RatFunc& f) {
    const RatFunc B = bb_factor(W->system().dim());
    const RatFunc lhs = make_Tcrr(W, i, lambda).apply(f) / B;
    const RatFunc rhs = make_Tcr(W, i, lambda).apply(f / B);
    CheckResult r;
    if (!(lhs == rhs)) {
        r.ok = false;
        r.detail = "conjugation fails on " + f.str();
    }
    return r;
}

} // namespace th
