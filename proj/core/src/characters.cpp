#include "twisted_hecke/characters.hpp"

namespace th {

Monomial act_monomial(const IMat& m, Family f, const Monomial& mono) {
    const int base = family_base(f);
    Monomial r = mono;
    for (int i = 0; i < m.d; ++i) {
        long s = 0;
        for (int j = 0; j < m.d; ++j) s += m(i, j) * mono[base + j];
        r[base + i] = static_cast<Monomial::Exp>(s);
    }
    return r;
}

RatFunc act_family(const WeylGroup& W, int w, Family f, const RatFunc& g) {
    if (w == 0) return g;
    const IMat& m = W.matrix(w);
    return g.map_monomials([&](const Monomial& mono) { return act_monomial(m, f, mono); });
}

RatFunc one_minus(const Monomial& m) { return RatFunc(LaurentPoly(1) - LaurentPoly::monomial(m)); }

RatFunc one_plus(const RatFunc& c, const Monomial& m) { return RatFunc(1) + c * RatFunc::monomial(m); }

Monomial character(const RootSystem& rs, const IVec& beta, Family f) { return rs.exp_monomial(beta, f); }

} // namespace th
