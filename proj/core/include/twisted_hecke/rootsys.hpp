#pragma once

// Root systems of type A (in GL_n coordinates), C2 and G2.
//
// Coordinates:
//   A(n)  ambient Z^n, simple roots e_i - e_{i+1}, standard inner product.
//   C2    ambient Z^2, a1 = (1,-1), a2 = (0,2), standard inner product.
//   G2    basis of simple roots, a1 long; Gram matrix [[6,-3],[-3,2]].
// In each case the root lattice sits inside Z^d and every reflection is an
// integer matrix, so e^beta is literally the monomial with exponent vector
// beta in whichever variable family is in use.

#include <string>
#include <string_view>
#include <vector>

#include "twisted_hecke/laurent.hpp"

namespace th {

using IVec = std::vector<long>;
using Weight = std::vector<QRat>;
// Row-major square integer matrix.
struct IMat {
    int d = 0;
    std::vector<long> a;
    long operator()(int r, int c) const { return a[static_cast<std::size_t>(r * d + c)]; }
    long& operator()(int r, int c) { return a[static_cast<std::size_t>(r * d + c)]; }
    static IMat identity(int d);
    friend bool operator==(const IMat&, const IMat&) = default;
};
IMat operator*(const IMat& x, const IMat& y);
IVec operator*(const IMat& m, const IVec& v);
Weight operator*(const IMat& m, const Weight& v);

enum class RootKind { A, C2, G2 };

class RootSystem {
public:
    // GL_n: rank n-1, ambient dimension n.
    static RootSystem A(int n);
    static RootSystem C2();
    static RootSystem G2();
    // "A3" (meaning GL_3), "GL3", "C2", "G2".
    static RootSystem parse(std::string_view name);

    RootKind kind() const { return kind_; }
    int rank() const { return static_cast<int>(simple_.size()); }
    int dim() const { return dim_; }
    std::string name() const;

    // 1-based index i.
    const IVec& simple_root(int i) const;
    const std::vector<IVec>& simple_roots() const { return simple_; }
    const std::vector<IVec>& positive_roots() const { return positive_; }
    bool is_positive_root(const IVec& root) const;
    bool is_root(const IVec& v) const;

    QRat inner(const Weight& u, const Weight& v) const;
    // <lambda, root^vee> = 2 (lambda, root) / (root, root)
    QRat pairing(const Weight& lambda, const IVec& root) const;
    // <lambda, alpha_i^vee>; throws IndexOutOfRange.
    QRat pairing(const Weight& lambda, int i) const;
    long pairing_int(const IVec& v, const IVec& root) const;
    IMat reflection(const IVec& root) const;

    // <lambda, alpha^vee> not an integer for every root.
    bool is_generic(const Weight& lambda) const;
    // Same open alcove: equal ceilings on every positive root, no pairing integral.
    bool same_alcove(const Weight& a, const Weight& b) const;
    // <mu, alpha^vee> integral for every simple root.
    bool is_integral(const Weight& mu) const;

    // e^beta in a variable family.
    Monomial exp_monomial(const IVec& beta, Family f) const;
    Monomial exp_monomial(const Weight& beta, Family f) const;

    void check_weight(const Weight& w) const;

private:
    RootKind kind_ = RootKind::A;
    int dim_ = 0;
    std::vector<IVec> simple_;
    std::vector<IVec> positive_;
    std::vector<std::vector<QRat>> gram_;
    IVec v0_; // dot product with v0 is positive exactly on positive roots

    void finish();
};

Weight parse_weight(std::string_view s);
std::string format_weight(const Weight& w);
Weight to_weight(const IVec& v);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const QRat& c, const Weight& a);

} // namespace th
