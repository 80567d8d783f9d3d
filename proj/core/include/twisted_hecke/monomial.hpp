#pragma once

// Variables and exponent vectors.
//
// Every monomial lives in one fixed universe of 32 slots: ten t's, ten x's,
// ten z's, then y and h (h stands for q^{1/2}). Exponents are small signed
// integers, so a monomial is a flat array and comparisons are cheap.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace th {

enum class Family : std::uint8_t { t = 0, x = 1, z = 2, y = 3, h = 4 };

inline constexpr int kFamilyWidth = 10;
inline constexpr int kSlots = 32;
inline constexpr int kSlotY = 30;
inline constexpr int kSlotH = 31;

struct VarId {
    Family family;
    int index; // 1-based for t/x/z, 0 for y/h

    int slot() const;
    static VarId from_slot(int slot);
    std::string name() const;
    static VarId parse(std::string_view s);

    friend bool operator==(const VarId&, const VarId&) = default;
};

inline VarId t_(int i) { return {Family::t, i}; }
inline VarId x_(int i) { return {Family::x, i}; }
inline VarId z_(int i) { return {Family::z, i}; }
inline VarId y_() { return {Family::y, 0}; }
inline VarId h_() { return {Family::h, 0}; }

// First slot of a family with indexed variables.
inline constexpr int family_base(Family f) { return static_cast<int>(f) * kFamilyWidth; }

class Monomial {
public:
    using Exp = std::int16_t;

    Monomial() { e_.fill(0); }
    static Monomial var(VarId v, int power = 1);

    Exp operator[](int slot) const { return e_[slot]; }
    Exp& operator[](int slot) { return e_[slot]; }
    Exp exp(VarId v) const { return e_[v.slot()]; }

    bool is_one() const;
    int degree() const;

    Monomial& operator*=(const Monomial& o);
    Monomial& operator/=(const Monomial& o);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
    Monomial inverse() const;
    Monomial pow(int k) const;

    // gcd of all exponents (0 for the unit monomial).
    int content() const;

    // Graded lexicographic: total degree first, then slot 0, 1, ... where a
    // larger exponent in the first differing slot is the larger monomial.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    std::size_t hash() const;
    // "t1^1*t2^-1"; empty string for the unit monomial.
    std::string str() const;

    const std::array<Exp, kSlots>& data() const { return e_; }

private:
    std::array<Exp, kSlots> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace th
