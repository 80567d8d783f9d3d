#include "twisted_hecke/monomial.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace th {

int VarId::slot() const {
    switch (family) {
    case Family::y: return kSlotY;
    case Family::h: return kSlotH;
    default:
        if (index < 1 || index > kFamilyWidth)
            throw std::out_of_range("variable index out of range");
        return family_base(family) + index - 1;
    }
}

VarId VarId::from_slot(int slot) {
    if (slot == kSlotY) return y_();
    if (slot == kSlotH) return h_();
    return {static_cast<Family>(slot / kFamilyWidth), slot % kFamilyWidth + 1};
}

std::string VarId::name() const {
    static const char* letters = "txzyh";
    std::string s(1, letters[static_cast<int>(family)]);
    if (family != Family::y && family != Family::h) s += std::to_string(index);
    return s;
}

VarId VarId::parse(std::string_view s) {
    if (s == "y") return y_();
    if (s == "h") return h_();
    if (s.size() < 2) throw std::invalid_argument("bad variable: " + std::string(s));
    Family f;
    switch (s[0]) {
    case 't': f = Family::t; break;
    case 'x': f = Family::x; break;
    case 'z': f = Family::z; break;
    default: throw std::invalid_argument("bad variable: " + std::string(s));
    }
    int idx = 0;
    for (char c : s.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad variable: " + std::string(s));
        idx = idx * 10 + (c - '0');
    }
    VarId v{f, idx};
    (void)v.slot();
    return v;
}

Monomial Monomial::var(VarId v, int power) {
    Monomial m;
    m.e_[v.slot()] = static_cast<Exp>(power);
    return m;
}

bool Monomial::is_one() const {
    for (Exp e : e_)
        if (e) return false;
    return true;
}

int Monomial::degree() const {
    int d = 0;
    for (Exp e : e_) d += e;
    return d;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    for (int i = 0; i < kSlots; ++i) e_[i] = static_cast<Exp>(e_[i] + o.e_[i]);
    return *this;
}

Monomial& Monomial::operator/=(const Monomial& o) {
    for (int i = 0; i < kSlots; ++i) e_[i] = static_cast<Exp>(e_[i] - o.e_[i]);
    return *this;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e_[i] = static_cast<Exp>(-e_[i]);
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) {
        int v = e_[i] * k;
        if (v > INT16_MAX || v < INT16_MIN) throw std::overflow_error("monomial exponent overflow");
        r.e_[i] = static_cast<Exp>(v);
    }
    return r;
}

int Monomial::content() const {
    int g = 0;
    for (Exp e : e_) g = std::gcd(g, std::abs(static_cast<int>(e)));
    return g;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (int i = 0; i < kSlots; ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Exp e : e_) {
        h ^= static_cast<std::uint16_t>(e);
        h *= 1099511628211ull;
    }
    return h;
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < kSlots; ++i) {
        if (!e_[i]) continue;
        if (!s.empty()) s += '*';
        s += VarId::from_slot(i).name();
        s += '^';
        s += std::to_string(e_[i]);
    }
    return s;
}

} // namespace th
