#pragma once

// Exact rationals. Thin value wrapper over GMP's mpq_class that keeps the
// canonical form (reduced, positive denominator) at all times.

#include <cstddef>
#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace th {

class QRat {
public:
    QRat() = default;
    QRat(long v) : v_(v) {}
    QRat(int v) : v_(v) {}
    QRat(long num, long den);
    explicit QRat(const mpz_class& z) : v_(z) {}
    explicit QRat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static QRat parse(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Only valid when the value is an integer that fits.
    long to_long() const;

    QRat& operator+=(const QRat& o) { v_ += o.v_; return *this; }
    QRat& operator-=(const QRat& o) { v_ -= o.v_; return *this; }
    QRat& operator*=(const QRat& o) { v_ *= o.v_; return *this; }
    QRat& operator/=(const QRat& o);

    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    QRat operator-() const { QRat r; r.v_ = -v_; return r; }

    friend bool operator==(const QRat& a, const QRat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const QRat& a, const QRat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string str() const { return v_.get_str(); }
    std::size_t hash() const;

private:
    mpq_class v_;
};

// Smallest integer >= a.
long ceil_q(const QRat& a);
// Largest integer <= a.
long floor_q(const QRat& a);

// If a = d^2 for a rational d >= 0, returns true and sets d.
bool rational_sqrt(const QRat& a, QRat& d);

std::ostream& operator<<(std::ostream& os, const QRat& q);

} // namespace th
