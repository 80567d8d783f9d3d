#include "twisted_hecke/dloper.hpp"

#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

void check_same_group(const OperatorElement& a, const OperatorElement& b) {
    if (a.group() != b.group() && a.group()->system().name() != b.group()->system().name())
        throw Error(ErrorCode::FamilyMismatch, "operators over different root systems");
}

const WeylPtr& group_for(BraidForm form) {
    static const WeylPtr a3 = WeylGroup::make(RootSystem::A(3));
    static const WeylPtr c2 = WeylGroup::make(RootSystem::C2());
    static const WeylPtr g2 = WeylGroup::make(RootSystem::G2());
    switch (form) {
    case BraidForm::C2: return c2;
    case BraidForm::G2: return g2;
    default: return a3;
    }
}

// L_i = e^{-alpha_i} in family f.
Monomial L_of(const RootSystem& rs, int i, Family f) {
    IVec neg = rs.simple_root(i);
    for (long& c : neg) c = -c;
    return rs.exp_monomial(neg, f);
}

} // namespace

OperatorElement OperatorElement::scalar(WeylPtr W, const RatFunc& c) {
    OperatorElement r(std::move(W));
    r.add(GroupKey{}, c);
    return r;
}

void OperatorElement::add(const GroupKey& g, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

RatFunc act_key(const WeylGroup& W, const GroupKey& g, const RatFunc& f) {
    if (g.t == 0 && g.x == 0 && g.z == 0) return f;
    const IMat* mt = g.t ? &W.matrix(g.t) : nullptr;
    const IMat* mx = g.x ? &W.matrix(g.x) : nullptr;
    const IMat* mz = g.z ? &W.matrix(g.z) : nullptr;
    return f.map_monomials([&](const Monomial& m) {
        Monomial r = m;
        if (mt) r = act_monomial(*mt, Family::t, r);
        if (mx) r = act_monomial(*mx, Family::x, r);
        if (mz) r = act_monomial(*mz, Family::z, r);
        return r;
    });
}

OperatorElement operator*(const OperatorElement& a, const OperatorElement& b) {
    check_same_group(a, b);
    const WeylGroup& W = *a.W_;
    OperatorElement r(a.W_);
    for (const auto& [ga, ca] : a.terms_)
        for (const auto& [gb, cb] : b.terms_) {
            GroupKey g{W.mul(ga.t, gb.t), W.mul(ga.x, gb.x), W.mul(ga.z, gb.z)};
            r.add(g, ca * act_key(W, ga, cb));
        }
    return r;
}

OperatorElement operator+(const OperatorElement& a, const OperatorElement& b) {
    check_same_group(a, b);
    OperatorElement r = a;
    for (const auto& [g, c] : b.terms_) r.add(g, c);
    return r;
}

OperatorElement OperatorElement::scaled(const RatFunc& c) const {
    OperatorElement r(W_);
    for (const auto& [g, d] : terms_) r.add(g, c * d);
    return r;
}

RatFunc OperatorElement::apply(const RatFunc& f) const {
    RatFunc r;
    for (const auto& [g, c] : terms_) r += c * act_key(*W_, g, f);
    return r;
}

bool operator==(const OperatorElement& a, const OperatorElement& b) {
    check_same_group(a, b);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            if (!ia->second.is_zero()) return false;
            ++ia;
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            if (!ib->second.is_zero()) return false;
            ++ib;
        } else {
            if (!(ia->second == ib->second)) return false;
            ++ia;
            ++ib;
        }
    }
    return true;
}

std::string OperatorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
        if (!s.empty()) s += " ; ";
        s += "[" + c.str() + "]";
        if (g.t) s += " t:" + W_->format(g.t);
        if (g.x) s += " x:" + W_->format(g.x);
        if (g.z) s += " z:" + W_->format(g.z);
    }
    return s;
}

OperatorElement make_T(const WeylPtr& W, Variant v, int i, const QRat& a, Family f) {
    const RootSystem& rs = W->system();
    if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "operator index " + std::to_string(i));
    if (f != Family::t && f != Family::x && f != Family::z)
        throw Error(ErrorCode::FamilyMismatch, "operators act on t, x or z");
    const Monomial L = L_of(rs, i, f);
    const RatFunc y = RatFunc::var(y_());
    const Monomial Ls = v == Variant::Plain ? L.inverse() : L;
    RatFunc cs = one_plus(y, Ls) / one_minus(L);
    RatFunc cid = (RatFunc(1) + y) * RatFunc::monomial(L.pow(static_cast<int>(ceil_q(a)) - 1)) / one_minus(L.inverse());
    GroupKey gs;
    const int s = W->simple(i);
    if (f == Family::t) gs.t = s;
    else if (f == Family::x) gs.x = s;
    else gs.z = s;
    OperatorElement r(W);
    r.add(gs, cs);
    r.add(GroupKey{}, cid);
    return r;
}

OperatorElement make_Tcr(const WeylPtr& W, int i, const Weight& lambda) {
    W->system().check_weight(lambda);
    return make_T(W, Variant::Plain, i, -W->system().pairing(lambda, i), Family::x);
}

OperatorElement make_Tcl(const WeylPtr& W, int i, const Weight& lambda) {
    W->system().check_weight(lambda);
    return make_T(W, Variant::Hat, i, W->system().pairing(lambda, i), Family::t);
}

OperatorElement make_Tcrr(const WeylPtr& W, int i, const Weight& lambda) {
    W->system().check_weight(lambda);
    return make_T(W, Variant::Hat, i, -W->system().pairing(lambda, i), Family::x);
}

OperatorElement compose(const std::vector<OperatorElement>& ops) {
    if (ops.empty()) throw Error(ErrorCode::InvalidInput, "compose of nothing");
    OperatorElement r = ops.back();
    for (std::size_t k = ops.size() - 1; k-- > 0;) r = ops[k] * r;
    return r;
}

bool op_equal(const OperatorElement& a, const OperatorElement& b) { return a == b; }

bool verify_quadratic(const WeylPtr& W, int i, const QRat& a, Variant v) {
    const QRat other = a.is_integer() ? QRat(1) - a : -a;
    OperatorElement lhs = make_T(W, v, i, other, Family::z) * make_T(W, v, i, a, Family::z);
    return lhs == OperatorElement::scalar(W, -RatFunc::var(y_()));
}

bool verify_braid(BraidForm form, const std::vector<QRat>& p, Variant v) {
    const WeylPtr& W = group_for(form);
    auto T = [&](int i, const QRat& a) { return make_T(W, v, i, a, Family::z); };
    std::vector<OperatorElement> lhs, rhs;
    switch (form) {
    case BraidForm::A: {
        if (p.size() != 3) throw Error(ErrorCode::InvalidInput, "A braid needs (l1,l2,l3)");
        const QRat &l1 = p[0], &l2 = p[1], &l3 = p[2];
        lhs = {T(1, l3 - l2), T(2, l3 - l1), T(1, l2 - l1)};
        rhs = {T(2, l2 - l1), T(1, l3 - l1), T(2, l3 - l2)};
        break;
    }
    case BraidForm::AMiddle: {
        if (p.size() != 3) throw Error(ErrorCode::InvalidInput, "needs (a,b,m)");
        const QRat &a = p[0], &b = p[1], &m = p[2];
        lhs = {T(1, a), T(2, m), T(1, b)};
        rhs = {T(2, b), T(1, m), T(2, a)};
        break;
    }
    case BraidForm::C2: {
        if (p.size() != 2) throw Error(ErrorCode::InvalidInput, "needs (a,b)");
        const QRat &a = p[0], &b = p[1];
        lhs = {T(1, a - b), T(2, a), T(1, a + b), T(2, b)};
        rhs = {T(2, b), T(1, a + b), T(2, a), T(1, a - b)};
        break;
    }
    case BraidForm::G2: {
        if (p.size() != 2) throw Error(ErrorCode::InvalidInput, "needs (a,b)");
        const QRat &a = p[0], &b = p[1];
        const QRat c1 = a, c2 = QRat(3) * a + QRat(3) * b, c3 = QRat(2) * a + QRat(3) * b,
                   c4 = QRat(3) * a + QRat(6) * b, c5 = a + QRat(3) * b, c6 = QRat(3) * b;
        lhs = {T(1, c1), T(2, c2), T(1, c3), T(2, c4), T(1, c5), T(2, c6)};
        rhs = {T(2, c6), T(1, c5), T(2, c4), T(1, c3), T(2, c2), T(1, c1)};
        break;
    }
    }
    return compose(lhs) == compose(rhs);
}

bool verify_braid_weight(const WeylPtr& W, const Weight& lambda, bool left) {
    W->system().check_weight(lambda);
    const int w0 = W->longest();
    auto build = [&](const Word& word) {
        std::vector<OperatorElement> ops;
        for (std::size_t k = 0; k < word.size(); ++k) {
            Word tail(word.begin() + static_cast<long>(k) + 1, word.end());
            Weight mu = W->act(W->from_word(tail), lambda);
            ops.push_back(left ? make_Tcl(W, word[k], mu) : make_Tcr(W, word[k], mu));
        }
        return compose(ops);
    };
    std::vector<Word> words = W->reduced_words(w0);
    OperatorElement first = build(words.front());
    for (std::size_t k = 1; k < words.size(); ++k)
        if (!(build(words[k]) == first)) return false;
    return true;
}

bool verify_LR_commute(const WeylPtr& W, int iL, const QRat& aL, int iR, const QRat& aR) {
    OperatorElement L = make_T(W, Variant::Hat, iL, aL, Family::t);
    OperatorElement R = make_T(W, Variant::Plain, iR, aR, Family::x);
    return L * R == R * L;
}

} // namespace th
