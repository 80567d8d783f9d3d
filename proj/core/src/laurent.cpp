#include "twisted_hecke/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace th {

namespace {

bool mono_less(const Term& a, const Term& b) { return a.mono < b.mono; }

} // namespace

LaurentPoly::LaurentPoly(const QRat& c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

LaurentPoly LaurentPoly::term(const QRat& c, const Monomial& m) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.canonicalize_terms();
    return p;
}

void LaurentPoly::canonicalize_terms() {
    std::sort(terms_.begin(), terms_.end(), mono_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        QRat c = std::move(terms_[i].coeff);
        while (j < terms_.size() && terms_[j].mono == terms_[i].mono) c += terms_[j++].coeff;
        if (!c.is_zero()) {
            terms_[out].mono = terms_[i].mono;
            terms_[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

QRat LaurentPoly::constant_coeff() const {
    for (const Term& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return QRat(0);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
            ++j;
        } else {
            QRat c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].mono);
    if (b.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
    const LaurentPoly& big = a.size() >= b.size() ? a : b;
    const LaurentPoly& small = a.size() >= b.size() ? b : a;
    std::unordered_map<Monomial, QRat, MonomialHash> acc;
    acc.reserve(big.size() * small.size());
    for (const Term& s : small.terms_)
        for (const Term& t : big.terms_) {
            auto [it, fresh] = acc.try_emplace(s.mono * t.mono);
            if (fresh) it->second = s.coeff * t.coeff;
            else it->second += s.coeff * t.coeff;
        }
    LaurentPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(), mono_less);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const QRat& c) const {
    if (c.is_zero()) return {};
    LaurentPoly r = *this;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly r = *this;
    for (Term& t : r.terms_) t.mono *= m;
    return r;
}

LaurentPoly LaurentPoly::times_term(const QRat& c, const Monomial& m) const {
    if (c.is_zero()) return {};
    LaurentPoly r = *this;
    for (Term& t : r.terms_) {
        t.mono *= m;
        t.coeff *= c;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({f(t.mono), t.coeff});
    r.canonicalize_terms();
    return r;
}

LaurentPoly LaurentPoly::map_terms(const std::function<Term(const Monomial&)>& f) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term img = f(t.mono);
        img.coeff *= t.coeff;
        if (!img.coeff.is_zero()) r.terms_.push_back(std::move(img));
    }
    r.canonicalize_terms();
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_binomial(const QRat& c, const Monomial& m) const {
    if (m.is_one()) throw std::invalid_argument("divide_binomial: constant divisor");
    if (terms_.empty()) return LaurentPoly();
    int j = 0;
    while (m[j] == 0) ++j;
    const int e = m[j];
    auto floordiv = [](int a, int b) {
        int q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    // Group terms into chains r * m^k.
    struct Chain { std::vector<std::pair<int, const QRat*>> items; };
    std::unordered_map<Monomial, Chain, MonomialHash> chains;
    std::vector<Monomial> order;
    for (const Term& t : terms_) {
        int k = floordiv(t.mono[j], e);
        Monomial r = t.mono / m.pow(k);
        auto [it, fresh] = chains.try_emplace(r);
        if (fresh) order.push_back(r);
        it->second.items.push_back({k, &t.coeff});
    }
    std::vector<Term> out;
    for (const Monomial& r : order) {
        auto& items = chains[r].items;
        std::sort(items.begin(), items.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        const int kmin = items.front().first, kmax = items.back().first;
        if (kmin == kmax) return std::nullopt;
        QRat prev(0);
        std::size_t pos = 0;
        for (int k = kmin; k < kmax; ++k) {
            QRat q = -(c * prev);
            if (pos < items.size() && items[pos].first == k) q += *items[pos++].second;
            if (!q.is_zero()) out.push_back({r * m.pow(k), q});
            prev = std::move(q);
        }
        if (*items.back().second != c * prev) return std::nullopt;
    }
    LaurentPoly q;
    q.terms_ = std::move(out);
    std::sort(q.terms_.begin(), q.terms_.end(), mono_less);
    return q;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& g) const {
    if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (terms_.empty()) return LaurentPoly();
    if (g.size() == 1) {
        const Term& t = g.terms_[0];
        return times_term(QRat(1) / t.coeff, t.mono.inverse());
    }
    if (g.size() == 2) {
        // g = a*m0 + b*m1 = a*m0*(1 + (b/a)*(m1/m0))
        const Term& lo = g.terms_[0];
        const Term& hi = g.terms_[1];
        auto q = divide_binomial(hi.coeff / lo.coeff, hi.mono / lo.mono);
        if (!q) return std::nullopt;
        return q->times_term(QRat(1) / lo.coeff, lo.mono.inverse());
    }
    // Graded lex is not a well-order on Laurent monomials, so shift both
    // operands to polynomials with no monomial factor first. If g | f then
    // the shifted quotient is a polynomial, and polynomial long division
    // terminates.
    auto low = [](const LaurentPoly& p) {
        Monomial m = p.terms_.front().mono;
        for (const Term& t : p.terms_)
            for (int k = 0; k < kSlots; ++k) m[k] = std::min(m[k], t.mono[k]);
        return m;
    };
    const Monomial mf = low(*this), mg = low(g);
    const LaurentPoly G = g.times_term(QRat(1), mg.inverse());
    const Term& glead = G.leading();
    LaurentPoly rem = times_term(QRat(1), mf.inverse());
    std::vector<Term> q;
    while (!rem.is_zero()) {
        Monomial qm = rem.leading().mono / glead.mono;
        for (int k = 0; k < kSlots; ++k)
            if (qm[k] < 0) return std::nullopt;
        QRat qc = rem.leading().coeff / glead.coeff;
        rem -= G.times_term(qc, qm);
        q.push_back({qm, std::move(qc)});
    }
    std::reverse(q.begin(), q.end());
    LaurentPoly out;
    out.terms_ = std::move(q);
    return out.times_term(QRat(1), mf / mg);
}

Term LaurentPoly::normalize_unit() {
    if (terms_.empty()) throw std::domain_error("normalize_unit: zero polynomial");
    Term unit = terms_.front();
    Monomial inv = unit.mono.inverse();
    QRat cinv = QRat(1) / unit.coeff;
    for (Term& t : terms_) {
        t.mono *= inv;
        t.coeff *= cinv;
    }
    return unit;
}

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (std::size_t i = a.terms_.size(); i-- > 0;) {
        const Term& x = a.terms_[i];
        const Term& y = b.terms_[i];
        if (x.mono != y.mono) return x.mono < y.mono;
        if (x.coeff != y.coeff) return x.coeff < y.coeff;
    }
    return false;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = terms_.size();
    for (const Term& t : terms_) h = (h * 1315423911u) ^ t.mono.hash() ^ (t.coeff.hash() << 1);
    return h;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = terms_.size(); i-- > 0;) {
        const Term& t = terms_[i];
        if (!s.empty()) s += " + ";
        s += t.coeff.str();
        std::string m = t.mono.str();
        if (!m.empty()) {
            s += '*';
            s += m;
        }
    }
    return s;
}

LaurentPoly exact_div_geom(long n, const Monomial& L) {
    std::vector<Term> t;
    if (n > 0)
        for (long k = 0; k < n; ++k) t.push_back({L.pow(static_cast<int>(k)), QRat(1)});
    else
        for (long k = 1; k <= -n; ++k) t.push_back({L.pow(static_cast<int>(-k)), QRat(-1)});
    return LaurentPoly::from_terms(std::move(t));
}

} // namespace th
