#include "twisted_hecke/ratfunc.hpp"

#include <algorithm>

namespace th {

namespace {

// Splits a normalized polynomial into normalized factors whose product is
// exactly the input. Only 1 - d^2 h^2 = (1 - d h)(1 + d h) is recognized.
void split_normalized(const LaurentPoly& p, std::vector<LaurentPoly>& out) {
    if (p.size() == 2) {
        const Term& top = p.terms()[1];
        const int k = top.mono.content();
        QRat d;
        if (k % 2 == 0 && rational_sqrt(-top.coeff, d)) {
            Monomial h;
            for (int s = 0; s < kSlots; ++s) h[s] = static_cast<Monomial::Exp>(top.mono[s] / 2);
            split_normalized(RatFunc::binomial(-d, h), out);
            split_normalized(RatFunc::binomial(d, h), out);
            return;
        }
    }
    out.push_back(p);
}

void insert_factor(std::vector<DenFactor>& den, LaurentPoly f, int mult) {
    auto it = std::lower_bound(den.begin(), den.end(), f,
                               [](const DenFactor& a, const LaurentPoly& b) { return poly_less(a.poly, b); });
    if (it != den.end() && it->poly == f) it->mult += mult;
    else den.insert(it, DenFactor{std::move(f), mult});
}

std::vector<DenFactor> merge_sum(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b) {
    std::vector<DenFactor> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && poly_less(a[i].poly, b[j].poly))) out.push_back(a[i++]);
        else if (i == a.size() || poly_less(b[j].poly, a[i].poly)) out.push_back(b[j++]);
        else {
            out.push_back({a[i].poly, a[i].mult + b[j].mult});
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<DenFactor> merge_max(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b) {
    std::vector<DenFactor> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && poly_less(a[i].poly, b[j].poly))) out.push_back(a[i++]);
        else if (i == a.size() || poly_less(b[j].poly, a[i].poly)) out.push_back(b[j++]);
        else {
            out.push_back({a[i].poly, std::max(a[i].mult, b[j].mult)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Product of L / d where d divides L factorwise.
LaurentPoly cofactor(const std::vector<DenFactor>& L, const std::vector<DenFactor>& d) {
    LaurentPoly r(1);
    std::size_t j = 0;
    for (const DenFactor& f : L) {
        int have = 0;
        while (j < d.size() && poly_less(d[j].poly, f.poly)) ++j;
        if (j < d.size() && d[j].poly == f.poly) have = d[j].mult;
        for (int k = have; k < f.mult; ++k) r *= f.poly;
    }
    return r;
}

std::optional<LaurentPoly> divide_by_factor(const LaurentPoly& num, const LaurentPoly& f) {
    if (f.size() == 2) return num.divide_binomial(f.terms()[1].coeff, f.terms()[1].mono);
    return num.divide_exact(f);
}

LaurentPoly expand(const std::vector<DenFactor>& den) {
    LaurentPoly r(1);
    for (const DenFactor& f : den) r *= f.poly.pow(static_cast<unsigned>(f.mult));
    return r;
}

} // namespace

void cancel_factors(LaurentPoly& num, std::vector<DenFactor>& den) {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (DenFactor& f : den) {
        while (f.mult > 0) {
            auto q = divide_by_factor(num, f.poly);
            if (!q) break;
            num = std::move(*q);
            --f.mult;
        }
    }
    std::erase_if(den, [](const DenFactor& f) { return f.mult == 0; });
}

LaurentPoly RatFunc::binomial(const QRat& c, const Monomial& m) {
    return LaurentPoly::from_terms({{Monomial(), QRat(1)}, {m, c}});
}

void RatFunc::add_factor(LaurentPoly p, int mult) {
    if (p.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "zero denominator");
    Term unit = p.normalize_unit();
    QRat c(1);
    for (int k = 0; k < mult; ++k) c /= unit.coeff;
    num_ = num_.times_term(c, unit.mono.pow(-mult));
    if (p.is_one()) return;
    std::vector<LaurentPoly> parts;
    split_normalized(p, parts);
    for (LaurentPoly& f : parts) insert_factor(den_, std::move(f), mult);
}

void RatFunc::reduce() { cancel_factors(num_, den_); }

RatFunc RatFunc::fraction(const LaurentPoly& num, const LaurentPoly& den) {
    RatFunc r(num);
    r.add_factor(den, 1);
    r.reduce();
    return r;
}

LaurentPoly RatFunc::den() const { return expand(den_); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        std::vector<DenFactor> L = merge_max(den_, o.den_);
        num_ = num_ * cofactor(L, den_) + o.num_ * cofactor(L, o.den_);
        den_ = std::move(L);
    }
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (o.den_.empty() && o.num_.is_term()) {
        num_ = num_.times_term(o.num_.terms()[0].coeff, o.num_.terms()[0].mono);
        return *this;
    }
    LaurentPoly na = num_, nb = o.num_;
    std::vector<DenFactor> da = den_, db = o.den_;
    if (!db.empty()) cancel_factors(na, db);
    if (!da.empty()) cancel_factors(nb, da);
    num_ = na * nb;
    den_ = merge_sum(da, db);
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r(expand(den_));
    r.add_factor(num_, 1);
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc result(1), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.same_form(b)) return true;
    if (a.is_zero() || b.is_zero()) return false;
    std::vector<DenFactor> L = merge_max(a.den_, b.den_);
    return a.num_ * cofactor(L, a.den_) == b.num_ * cofactor(L, b.den_);
}

RatFunc RatFunc::substitute_terms(const std::function<Term(const Monomial&)>& f) const {
    RatFunc r(num_.map_terms(f));
    for (const DenFactor& d : den_) {
        LaurentPoly img = d.poly.map_terms(f);
        if (img.is_zero())
            throw Error(ErrorCode::DenominatorVanishes, "factor " + d.poly.str() + " maps to 0");
        r.add_factor(std::move(img), d.mult);
    }
    r.reduce();
    return r;
}

RatFunc RatFunc::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
    return substitute_terms([&f](const Monomial& m) { return Term{f(m), QRat(1)}; });
}

namespace {

RatFunc evaluate(const LaurentPoly& p, const std::map<int, RatFunc>& bind) {
    RatFunc acc;
    for (const Term& t : p.terms()) {
        Monomial rest = t.mono;
        RatFunc v(t.coeff);
        for (const auto& [slot, val] : bind) {
            int e = rest[slot];
            if (!e) continue;
            rest[slot] = 0;
            v *= val.pow(e);
        }
        v *= RatFunc::monomial(rest);
        acc += v;
    }
    return acc;
}

} // namespace

RatFunc RatFunc::substitute(const std::map<int, RatFunc>& bind) const {
    RatFunc n = evaluate(num_, bind);
    RatFunc d(1);
    for (const DenFactor& f : den_) {
        RatFunc img = evaluate(f.poly, bind);
        if (img.is_zero())
            throw Error(ErrorCode::DenominatorVanishes, "factor " + f.poly.str() + " maps to 0");
        d *= img.pow(f.mult);
    }
    return n / d;
}

std::string RatFunc::str() const {
    if (den_.empty()) return num_.str();
    return num_.str() + " / " + den().str();
}

std::string RatFunc::pretty() const {
    if (den_.empty()) return num_.str();
    std::string s = "(" + num_.str() + ") / (";
    bool first = true;
    for (const DenFactor& f : den_) {
        if (!first) s += " * ";
        first = false;
        s += "(" + f.poly.str() + ")";
        if (f.mult > 1) s += "^" + std::to_string(f.mult);
    }
    return s + ")";
}

} // namespace th
