#include "twisted_hecke/flagk.hpp"

#include "json.hpp"

#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

void check_same(const LocalizedClass& a, const LocalizedClass& b) {
    if (a.group() != b.group() && a.weyl().system().name() != b.weyl().system().name())
        throw Error(ErrorCode::RankMismatch, "classes over different groups");
}

IVec neg(IVec v) {
    for (long& c : v) c = -c;
    return v;
}

} // namespace

LocalizedClass::LocalizedClass(WeylPtr W) : W_(std::move(W)), r_(static_cast<std::size_t>(W_->size())) {}

LocalizedClass& LocalizedClass::operator+=(const LocalizedClass& o) {
    check_same(*this, o);
    for (std::size_t k = 0; k < r_.size(); ++k) r_[k] += o.r_[k];
    return *this;
}

LocalizedClass& LocalizedClass::operator-=(const LocalizedClass& o) {
    check_same(*this, o);
    for (std::size_t k = 0; k < r_.size(); ++k) r_[k] -= o.r_[k];
    return *this;
}

LocalizedClass LocalizedClass::scaled(const RatFunc& c) const {
    LocalizedClass r = *this;
    for (RatFunc& f : r.r_) f *= c;
    return r;
}

LocalizedClass LocalizedClass::times(const LocalizedClass& o) const {
    check_same(*this, o);
    LocalizedClass r = *this;
    for (std::size_t k = 0; k < r_.size(); ++k) r.r_[k] *= o.r_[k];
    return r;
}

bool LocalizedClass::is_zero() const {
    for (const RatFunc& f : r_)
        if (!f.is_zero()) return false;
    return true;
}

bool operator==(const LocalizedClass& a, const LocalizedClass& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.r_.size(); ++k)
        if (!(a.r_[k] == b.r_[k])) return false;
    return true;
}

LocalizedClass LocalizedClass::substitute_y(const RatFunc& yval) const {
    LocalizedClass r = *this;
    std::map<int, RatFunc> b{{kSlotY, yval}};
    for (RatFunc& f : r.r_) f = f.substitute(b);
    return r;
}

std::string LocalizedClass::to_json(const std::string& slope) const {
    nlohmann::ordered_json j;
    j["system"] = W_->system().name();
    j["slope"] = slope;
    nlohmann::ordered_json res = nlohmann::ordered_json::object();
    for (int s = 0; s < size(); ++s) res[W_->format(s)] = r_[static_cast<std::size_t>(s)].str();
    j["restrictions"] = res;
    return j.dump();
}

std::string LocalizedClass::to_text() const {
    std::string out;
    for (int s = 0; s < size(); ++s) out += W_->format(s) + ": " + r_[static_cast<std::size_t>(s)].str() + "\n";
    return out;
}

RatFunc euler_class(const WeylGroup& W, int sigma) {
    const RootSystem& rs = W.system();
    RatFunc e(1);
    for (const IVec& a : rs.positive_roots()) e *= one_minus(rs.exp_monomial(W.act(sigma, a), Family::t));
    return e;
}

Monomial line_L(const WeylGroup& W, int s, int sigma) {
    const RootSystem& rs = W.system();
    return rs.exp_monomial(neg(W.act(sigma, rs.simple_root(s))), Family::t);
}

Monomial line_of_weight(const WeylGroup& W, const Weight& mu, int sigma) {
    W.system().check_weight(mu);
    Weight v = W.act(sigma, mu);
    for (QRat& c : v) c = -c;
    return W.system().exp_monomial(v, Family::t);
}

LocalizedClass constant_class(const WeylPtr& W, const RatFunc& c) {
    LocalizedClass r(W);
    for (int s = 0; s < W->size(); ++s) r[s] = c;
    return r;
}

LocalizedClass line_class(const WeylPtr& W, const Weight& mu) {
    if (!W->system().is_integral(mu))
        throw Error(ErrorCode::NonIntegralShift, "weight " + format_weight(mu) + " is not integral");
    LocalizedClass r(W);
    for (int s = 0; s < W->size(); ++s) r[s] = RatFunc::monomial(line_of_weight(*W, mu, s));
    return r;
}

LocalizedClass mc_point(const WeylPtr& W) {
    LocalizedClass r(W);
    r[0] = euler_class(*W, 0);
    return r;
}

RatFunc y_var() { return RatFunc::var(y_()); }
RatFunc h_var() { return RatFunc::var(h_()); }
RatFunc minus_h2() { return -RatFunc::var(h_(), 2); }

LocalizedClass dl_right_a(int s, const QRat& a, const LocalizedClass& xi, const RatFunc& yval) {
    const WeylGroup& W = xi.weyl();
    if (s < 1 || s > W.rank()) throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(s));
    const int c = static_cast<int>(ceil_q(a));
    const RatFunc one_y = RatFunc(1) + yval;
    LocalizedClass out(xi.group());
    for (int sigma = 0; sigma < W.size(); ++sigma) {
        const RatFunc& here = xi[sigma];
        const RatFunc& there = xi[W.rmul(sigma, s)];
        if (here.is_zero() && there.is_zero()) continue;
        const Monomial L = line_L(W, s, sigma);
        RatFunc num;
        if (!there.is_zero()) num += one_plus(yval, L.inverse()) * there;
        if (!here.is_zero()) num -= one_y * RatFunc::monomial(L.pow(c)) * here;
        out[sigma] = num / one_minus(L);
    }
    return out;
}

LocalizedClass dl_left_a(int s, const QRat& a, const LocalizedClass& xi, const RatFunc& yval) {
    const WeylGroup& W = xi.weyl();
    const RootSystem& rs = W.system();
    if (s < 1 || s > W.rank()) throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(s));
    const int c = static_cast<int>(ceil_q(a));
    const Monomial A = rs.exp_monomial(neg(rs.simple_root(s)), Family::t); // e^{-alpha_s}
    const RatFunc one_y = RatFunc(1) + yval;
    const RatFunc cs = one_plus(yval, A) / one_minus(A);
    const RatFunc cid = one_y * RatFunc::monomial(A.pow(c)) / one_minus(A);
    const int sw = W.simple(s);
    LocalizedClass out(xi.group());
    for (int sigma = 0; sigma < W.size(); ++sigma) {
        const RatFunc& here = xi[sigma];
        const RatFunc& there = xi[W.lmul(s, sigma)];
        if (here.is_zero() && there.is_zero()) continue;
        RatFunc v;
        if (!there.is_zero()) v += cs * act_family(W, sw, Family::t, there);
        if (!here.is_zero()) v -= cid * here;
        out[sigma] = v;
    }
    return out;
}

LocalizedClass dl_right(int s, const Weight& lambda, const LocalizedClass& xi, const RatFunc& yval) {
    return dl_right_a(s, -xi.weyl().system().pairing(lambda, s), xi, yval);
}

LocalizedClass dl_left(int s, const Weight& lambda, const LocalizedClass& xi, const RatFunc& yval) {
    return dl_left_a(s, xi.weyl().system().pairing(lambda, s), xi, yval);
}

LocalizedClass dl_right(int s, const Weight& lambda, const LocalizedClass& xi) {
    return dl_right(s, lambda, xi, y_var());
}

LocalizedClass dl_left(int s, const Weight& lambda, const LocalizedClass& xi) {
    return dl_left(s, lambda, xi, y_var());
}

std::vector<Weight> right_slopes(const WeylGroup& W, const Word& word, const Weight& lambda) {
    W.system().check_weight(lambda);
    std::vector<Weight> out;
    Weight mu = W.act(W.from_word(word), lambda);
    for (int i : word) {
        out.push_back(mu);
        mu = W.act(W.simple(i), mu);
    }
    return out;
}

std::vector<Weight> left_slopes(const WeylGroup& W, const Word& word, const Weight& lambda) {
    W.system().check_weight(lambda);
    std::vector<Weight> out(word.size());
    Weight mu = lambda;
    for (std::size_t j = word.size(); j-- > 0;) {
        out[j] = mu;
        mu = W.act(W.simple(word[j]), mu);
    }
    return out;
}

LocalizedClass mc_cell(const WeylPtr& W, int w, const Weight& lambda, const RouteSpec& route) {
    W->system().check_weight(lambda);
    Word word = route.word ? *route.word : W->normal_form(w);
    if (!W->is_reduced(word))
        throw Error(ErrorCode::NonReducedWord, "word " + W->format_word(word) + " is not reduced");
    if (W->from_word(word) != w)
        throw Error(ErrorCode::InvalidInput, "word " + W->format_word(word) + " is not a word for " + W->format(w));
    LocalizedClass c = mc_point(W);
    if (route.route == Route::Right) {
        std::vector<Weight> mu = right_slopes(*W, word, lambda);
        for (std::size_t j = 0; j < word.size(); ++j) c = dl_right(word[j], mu[j], c);
    } else {
        std::vector<Weight> mu = left_slopes(*W, word, lambda);
        for (std::size_t j = word.size(); j-- > 0;) c = dl_left(word[j], mu[j], c);
    }
    return c;
}

LocalizedClass mc_cell(const WeylPtr& W, int w, const Weight& lambda, Route route) {
    return mc_cell(W, w, lambda, RouteSpec{route, std::nullopt});
}

LocalizedClass normalize_stab(const LocalizedClass& mc, int length) {
    return mc.substitute_y(minus_h2()).scaled(RatFunc::var(h_(), -length));
}

LocalizedClass stable_envelope(const WeylPtr& W, int w, const Weight& lambda, Route route) {
    W->system().check_weight(lambda);
    if (!W->system().is_generic(lambda))
        throw Error(ErrorCode::NonGenericSlope, "slope " + format_weight(lambda) + " lies on a wall");
    return normalize_stab(mc_cell(W, w, lambda, route), W->length(w));
}

LocalizedClass left_translate(int sigma, const LocalizedClass& xi) {
    const WeylGroup& W = xi.weyl();
    const int si = W.inverse(sigma);
    LocalizedClass r(xi.group());
    for (int tau = 0; tau < W.size(); ++tau) r[tau] = act_family(W, sigma, Family::t, xi[W.mul(si, tau)]);
    return r;
}

LocalizedClass right_translate(int sigma, const LocalizedClass& xi) {
    const WeylGroup& W = xi.weyl();
    LocalizedClass r(xi.group());
    for (int tau = 0; tau < W.size(); ++tau) r[tau] = xi[W.mul(tau, sigma)];
    return r;
}

LocalizedClass periodicity_shift(const LocalizedClass& xi, const Weight& mu) {
    return xi.times(line_class(xi.group(), mu));
}

RatFunc minus_y_pow_half(int twice_k, const RatFunc& yval) {
    if (twice_k % 2 != 0)
        throw Error(ErrorCode::NonIntegralExponent, "(-y)^{" + std::to_string(twice_k) + "/2}");
    const int k = twice_k / 2;
    return (-yval).pow(k);
}

std::vector<int> support_violations(const LocalizedClass& xi, int w) {
    std::vector<int> bad;
    for (int s = 0; s < xi.size(); ++s)
        if (!xi[s].is_zero() && !xi.weyl().bruhat_leq(s, w)) bad.push_back(s);
    return bad;
}

} // namespace th
