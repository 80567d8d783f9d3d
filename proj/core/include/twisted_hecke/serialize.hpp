#pragma once

// Text and JSON forms of polynomials and rational functions.
//
// Text grammar (deterministic under the monomial order, terms descending):
//   poly     := "0" | term (" + " term)*
//   term     := coeff ("*" var "^" int)*
//   ratfunc  := poly | poly " / " poly

#include <string>
#include <string_view>

#include "twisted_hecke/ratfunc.hpp"

namespace th {

LaurentPoly parse_laurent(std::string_view s);
RatFunc parse_ratfunc(std::string_view s);

// {"vars":[...],"num":[["c",[e...]],...],"den":[...]}; coefficients are
// strings so that big rationals survive untouched.
std::string ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(std::string_view json);

} // namespace th
