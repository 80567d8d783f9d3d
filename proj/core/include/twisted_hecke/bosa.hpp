#pragma once

// Bott-Samelson fixed points (binary sequences) and the localization oracle.
//
// mc_via_lrr recomputes mC(w, lambda) from the pointwise rules on the
// Bott-Samelson resolution and the Lefschetz-Riemann-Roch sum, without
// touching the Demazure-Lusztig recursion. Letters are appended on the right,
// letter j at slope mu_{j-1} = s_{i_j} ... s_{i_l} lambda, exactly as in the
// right recursion:
//   bit 0: point p unchanged, factor (1+y) L^{c-1} / (1 - L^-1), L = L_s|p,
//          c = ceil(-<mu_{j-1}, alpha_{i_j}^vee>)
//   bit 1: point p -> p s, factor (1 + y L^-1) / (1 - L^-1), L = L_s|{p s}
// and mC|sigma = eu(T_sigma) * sum over sequences landing at sigma.

#include <cstdint>
#include <map>
#include <vector>

#include "twisted_hecke/flagk.hpp"

namespace th {

using BinarySeq = std::vector<std::uint8_t>;

struct ChevalleyTerm {
    IVec gamma;       // w_{>j}^{-1} alpha_{i_j}
    QRat coeff;       // <lambda, gamma^vee>
    QRat coeff_moved; // <w_{>j} lambda, alpha_{i_j}^vee>, equal to coeff
};

std::vector<ChevalleyTerm> chevalley_coeffs(const WeylGroup& W, const Word& word, const Weight& lambda);

// Image point p(eps) = prod s_{i_j}^{eps_j}.
int image_point(const WeylGroup& W, const Word& word, const BinarySeq& eps);

// The local contributions at all 2^l fixed points, keyed by the sequence.
std::map<BinarySeq, RatFunc> bs_restrictions(const WeylGroup& W, const Word& word, const Weight& lambda);

LocalizedClass mc_via_lrr(const WeylPtr& W, const Word& word, const Weight& lambda);

// Divisor multiplicities of D_{w,lambda} on the matrix resolutions (type A).
enum class Resolution { Left, Right };
struct MultiplicityTable {
    std::vector<QRat> boundary_B; // coefficient of d_{B,j}, j = 1..n
    std::vector<QRat> letters;    // coefficient of d_j, j = 1..l, from the M_{w,k} rule
    std::vector<QRat> pairings;   // <w_{>j} lambda, alpha_{i_j}^vee>
};
// 1 iff w_{>j}^{-1}(i_j) <= k < w_{>j}^{-1}(i_j + 1)
int letter_multiplicity(const WeylGroup& W, const Word& word, int j, int k);
MultiplicityTable matrix_multiplicities(const WeylGroup& W, const Word& word, Resolution side, const Weight& lambda);

// Closed formula for the left-resolution localized matrix class at eps.
// Corrected: the diagonal factors 1/(1 - x_j/t_j) are included and the
// exponent uses lambda_j. Literal: the formula as printed, without the
// diagonal denominators (the free index i is read as j).
enum class ClosedFormula { Corrected, Literal };
RatFunc matrix_closed_formula(const WeylGroup& W, const Word& word, const Weight& lambda, const BinarySeq& eps,
                              ClosedFormula variant = ClosedFormula::Corrected);
// E * sum over all eps.
RatFunc matrix_closed_sum(const WeylGroup& W, const Word& word, const Weight& lambda,
                          ClosedFormula variant = ClosedFormula::Corrected);

// All 2^l sequences in lexicographic order.
std::vector<BinarySeq> all_sequences(int l);

} // namespace th
