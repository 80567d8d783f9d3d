#pragma once

// Characters e^beta as monomials, and the Weyl group acting on one variable
// family of a rational function.

#include "twisted_hecke/ratfunc.hpp"
#include "twisted_hecke/weyl.hpp"

namespace th {

// Exponents in the slots of family f are replaced by M times themselves.
Monomial act_monomial(const IMat& m, Family f, const Monomial& mono);
RatFunc act_family(const WeylGroup& W, int w, Family f, const RatFunc& g);

// 1 - c*m and 1 + c*m as rational functions.
RatFunc one_minus(const Monomial& m);
RatFunc one_plus(const RatFunc& c, const Monomial& m);

// e^beta in family f; beta given as an integer vector.
Monomial character(const RootSystem& rs, const IVec& beta, Family f);

} // namespace th
