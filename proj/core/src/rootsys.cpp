#include "twisted_hecke/rootsys.hpp"

#include <algorithm>
#include <set>

#include "twisted_hecke/errors.hpp"

namespace th {

IMat IMat::identity(int d) {
    IMat m{d, std::vector<long>(static_cast<std::size_t>(d * d), 0)};
    for (int i = 0; i < d; ++i) m(i, i) = 1;
    return m;
}

IMat operator*(const IMat& x, const IMat& y) {
    IMat r{x.d, std::vector<long>(x.a.size(), 0)};
    for (int i = 0; i < x.d; ++i)
        for (int k = 0; k < x.d; ++k) {
            long v = x(i, k);
            if (!v) continue;
            for (int j = 0; j < x.d; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

IVec operator*(const IMat& m, const IVec& v) {
    IVec r(static_cast<std::size_t>(m.d), 0);
    for (int i = 0; i < m.d; ++i)
        for (int j = 0; j < m.d; ++j) r[i] += m(i, j) * v[j];
    return r;
}

Weight operator*(const IMat& m, const Weight& v) {
    Weight r(static_cast<std::size_t>(m.d), QRat(0));
    for (int i = 0; i < m.d; ++i)
        for (int j = 0; j < m.d; ++j)
            if (m(i, j)) r[i] += QRat(m(i, j)) * v[j];
    return r;
}

RootSystem RootSystem::A(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "GL_n needs n >= 1");
    if (n > kFamilyWidth) throw Error(ErrorCode::TooLarge, "GL_n with n > 10");
    RootSystem r;
    r.kind_ = RootKind::A;
    r.dim_ = n;
    for (int i = 0; i + 1 < n; ++i) {
        IVec a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        r.simple_.push_back(a);
    }
    r.gram_.assign(n, std::vector<QRat>(n, QRat(0)));
    for (int i = 0; i < n; ++i) r.gram_[i][i] = QRat(1);
    for (int i = 0; i < n; ++i) r.v0_.push_back(n - i);
    r.finish();
    return r;
}

RootSystem RootSystem::C2() {
    RootSystem r;
    r.kind_ = RootKind::C2;
    r.dim_ = 2;
    r.simple_ = {{1, -1}, {0, 2}};
    r.gram_ = {{QRat(1), QRat(0)}, {QRat(0), QRat(1)}};
    r.v0_ = {2, 1};
    r.finish();
    return r;
}

RootSystem RootSystem::G2() {
    RootSystem r;
    r.kind_ = RootKind::G2;
    r.dim_ = 2;
    r.simple_ = {{1, 0}, {0, 1}};
    r.gram_ = {{QRat(6), QRat(-3)}, {QRat(-3), QRat(2)}};
    r.v0_ = {5, 9};
    r.finish();
    return r;
}

RootSystem RootSystem::parse(std::string_view name) {
    std::string s(name);
    if (s == "C2") return C2();
    if (s == "G2") return G2();
    std::string digits;
    if (s.size() >= 2 && s[0] == 'A') digits = s.substr(1);
    else if (s.size() >= 3 && s.substr(0, 2) == "GL") digits = s.substr(2);
    if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw Error(ErrorCode::InvalidInput, "unknown system '" + s + "' (use A<n>/GL<n>, C2, G2)");
    return A(std::stoi(digits));
}

std::string RootSystem::name() const {
    switch (kind_) {
    case RootKind::C2: return "C2";
    case RootKind::G2: return "G2";
    default: return "A" + std::to_string(dim_);
    }
}

void RootSystem::finish() {
    // Close the simple roots under all simple reflections.
    std::set<IVec> roots(simple_.begin(), simple_.end());
    std::vector<IVec> frontier(simple_.begin(), simple_.end());
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& b : frontier)
            for (const IVec& a : simple_) {
                IVec c = reflection(a) * b;
                if (roots.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    positive_.clear();
    for (const IVec& b : roots)
        if (is_positive_root(b)) positive_.push_back(b);
}

const IVec& RootSystem::simple_root(int i) const {
    if (i < 1 || i > rank())
        throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(i));
    return simple_[i - 1];
}

bool RootSystem::is_positive_root(const IVec& root) const {
    long s = 0;
    for (int k = 0; k < dim_; ++k) s += v0_[k] * root[k];
    return s > 0;
}

bool RootSystem::is_root(const IVec& v) const {
    for (const IVec& p : positive_) {
        if (p == v) return true;
        bool neg = true;
        for (int k = 0; k < dim_; ++k)
            if (p[k] != -v[k]) neg = false;
        if (neg) return true;
    }
    return false;
}

QRat RootSystem::inner(const Weight& u, const Weight& v) const {
    QRat s(0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!gram_[i][j].is_zero()) s += u[i] * gram_[i][j] * v[j];
    return s;
}

QRat RootSystem::pairing(const Weight& lambda, const IVec& root) const {
    check_weight(lambda);
    Weight r = to_weight(root);
    return QRat(2) * inner(lambda, r) / inner(r, r);
}

QRat RootSystem::pairing(const Weight& lambda, int i) const { return pairing(lambda, simple_root(i)); }

long RootSystem::pairing_int(const IVec& v, const IVec& root) const {
    QRat p = pairing(to_weight(v), root);
    if (!p.is_integer()) throw Error(ErrorCode::InvalidInput, "non-integral pairing on lattice vector");
    return p.to_long();
}

IMat RootSystem::reflection(const IVec& root) const {
    IMat m = IMat::identity(dim_);
    for (int j = 0; j < dim_; ++j) {
        IVec e(dim_, 0);
        e[j] = 1;
        long p = pairing_int(e, root);
        for (int i = 0; i < dim_; ++i) m(i, j) -= p * root[i];
    }
    return m;
}

bool RootSystem::is_generic(const Weight& lambda) const {
    for (const IVec& a : positive_)
        if (pairing(lambda, a).is_integer()) return false;
    return true;
}

bool RootSystem::same_alcove(const Weight& a, const Weight& b) const {
    for (const IVec& r : positive_) {
        QRat pa = pairing(a, r), pb = pairing(b, r);
        if (pa.is_integer() || pb.is_integer()) return false;
        if (ceil_q(pa) != ceil_q(pb)) return false;
    }
    return true;
}

bool RootSystem::is_integral(const Weight& mu) const {
    check_weight(mu);
    if (kind_ == RootKind::A) {
        for (const QRat& c : mu)
            if (!c.is_integer()) return false;
        return true;
    }
    for (int k = 0; k < dim_; ++k)
        if (!mu[k].is_integer()) return false;
    return true;
}

Monomial RootSystem::exp_monomial(const IVec& beta, Family f) const {
    Monomial m;
    const int base = family_base(f);
    for (int k = 0; k < dim_; ++k) m[base + k] = static_cast<Monomial::Exp>(beta[k]);
    return m;
}

Monomial RootSystem::exp_monomial(const Weight& beta, Family f) const {
    IVec b;
    for (const QRat& c : beta) {
        if (!c.is_integer()) throw Error(ErrorCode::NonIntegralShift, "character " + format_weight(beta) + " is not integral");
        b.push_back(c.to_long());
    }
    return exp_monomial(b, f);
}

void RootSystem::check_weight(const Weight& w) const {
    if (static_cast<int>(w.size()) != dim_)
        throw Error(ErrorCode::RankMismatch, "weight has " + std::to_string(w.size()) +
                                                 " coordinates, system " + name() + " needs " +
                                                 std::to_string(dim_));
}

Weight parse_weight(std::string_view s) {
    Weight w;
    std::size_t pos = 0;
    while (true) {
        std::size_t k = s.find(',', pos);
        std::string_view part = s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos);
        try {
            w.push_back(QRat::parse(part));
        } catch (const std::exception& e) {
            throw Error(ErrorCode::InvalidInput, "bad slope coordinate '" + std::string(part) + "'");
        }
        if (k == std::string_view::npos) break;
        pos = k + 1;
    }
    return w;
}

std::string format_weight(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i].str();
    }
    return s;
}

Weight to_weight(const IVec& v) {
    Weight w;
    for (long c : v) w.push_back(QRat(c));
    return w;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Weight operator*(const QRat& c, const Weight& a) {
    Weight r = a;
    for (QRat& x : r) x *= c;
    return r;
}

} // namespace th
