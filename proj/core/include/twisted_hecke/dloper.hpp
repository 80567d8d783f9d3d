#pragma once

// The universal twisted Hecke algebra acting on Laurent polynomials.
//
// An operator is a finite sum  sum_g c_g * g  where g = (u, v, w) is a triple
// of Weyl group elements acting on the t-, x- and z-families respectively and
// c_g is a rational function. Composition follows
//     (c g) o (d h) = c * g(d) * (g h),
// so operator identities are decided coefficientwise, with no test functions.
//
// On the acted-on family, L_i = e^{-alpha_i} (type A: z_{i+1}/z_i).
//   Tfr_i(a) = (1 + y L^-1)/(1 - L) s_i + (1+y) L^{ceil(a)-1}/(1 - L^-1)
//   Tfl_i(a) = (1 + y L)/(1 - L) s_i    + (1+y) L^{ceil(a)-1}/(1 - L^-1)

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "twisted_hecke/characters.hpp"

namespace th {

struct GroupKey {
    int t = 0, x = 0, z = 0;
    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

class OperatorElement {
public:
    explicit OperatorElement(WeylPtr W) : W_(std::move(W)) {}
    static OperatorElement identity(WeylPtr W) { return scalar(std::move(W), RatFunc(1)); }
    static OperatorElement scalar(WeylPtr W, const RatFunc& c);

    const WeylPtr& group() const { return W_; }
    const std::map<GroupKey, RatFunc>& terms() const { return terms_; }
    void add(const GroupKey& g, const RatFunc& c);

    // Composition: (A * B)(f) = A(B(f)).
    friend OperatorElement operator*(const OperatorElement& a, const OperatorElement& b);
    friend OperatorElement operator+(const OperatorElement& a, const OperatorElement& b);
    OperatorElement scaled(const RatFunc& c) const;

    RatFunc apply(const RatFunc& f) const;

    friend bool operator==(const OperatorElement& a, const OperatorElement& b);
    std::string str() const;

private:
    WeylPtr W_;
    std::map<GroupKey, RatFunc> terms_;
};

// g(f): each component of g acts on its own family.
RatFunc act_key(const WeylGroup& W, const GroupKey& g, const RatFunc& f);

enum class Variant { Plain, Hat }; // Tfr / Tfl

OperatorElement make_T(const WeylPtr& W, Variant v, int i, const QRat& a, Family f);
inline OperatorElement make_Tfr(const WeylPtr& W, int i, const QRat& a, Family f = Family::z) {
    return make_T(W, Variant::Plain, i, a, f);
}
inline OperatorElement make_Tfl(const WeylPtr& W, int i, const QRat& a, Family f = Family::z) {
    return make_T(W, Variant::Hat, i, a, f);
}
// Tcr_i(lambda) = Tfr_i(-<lambda, alpha_i^vee>) on x.
OperatorElement make_Tcr(const WeylPtr& W, int i, const Weight& lambda);
// Tcl_i(lambda) = Tfl_i(<lambda, alpha_i^vee>) on t.
OperatorElement make_Tcl(const WeylPtr& W, int i, const Weight& lambda);
// Hat right operator: Tfl_i(-<lambda, alpha_i^vee>) on x.
OperatorElement make_Tcrr(const WeylPtr& W, int i, const Weight& lambda);

// ops[0] o ops[1] o ... (the last one is applied first).
OperatorElement compose(const std::vector<OperatorElement>& ops);
bool op_equal(const OperatorElement& a, const OperatorElement& b);

// T_i(-a) o T_i(a) = -y (a not integral), T_i(1-a) o T_i(a) = -y (a integral).
bool verify_quadratic(const WeylPtr& W, int i, const QRat& a, Variant v);

// Scalar braid forms. For A the parameters are (l1, l2, l3) on letters 1, 2;
// AMiddle takes (a, b, m) and tests T1(a) T2(m) T1(b) = T2(b) T1(m) T2(a);
// for C2 and G2 they are (a, b).
enum class BraidForm { A, AMiddle, C2, G2 };
bool verify_braid(BraidForm form, const std::vector<QRat>& params, Variant v);
// Weight form: prod T_{s_{i_k}}(v_k lambda) over the two reduced words of w0,
// with Tcr (plain, x) or Tcl (hat, t).
bool verify_braid_weight(const WeylPtr& W, const Weight& lambda, bool left);

// Tcl_{iL}(aL) on t commutes with Tcr_{iR}(aR) on x.
bool verify_LR_commute(const WeylPtr& W, int iL, const QRat& aL, int iR, const QRat& aR);

} // namespace th
