#pragma once

// K-theoretic stable envelopes for T*P^1, the induced R-matrix, and the
// unitarity / Yang-Baxter / degree / diagonal-decomposition checks.

#include "kenum/config.hpp"
#include "kenum/core.hpp"
#include "kenum/factored.hpp"

#include <vector>

namespace kenum::stab {

const VariableSet& tp1_vars();  // {a1, a2, h}   (h is the weight of omega)

enum class Chamber { Plus, Minus };  // Plus: a1/a2 -> 0

// class c0 + c1 * L with L = O(1); restriction uses L|_{p_i} = a_i^{-1}
struct KClassTP1 {
  LaurentPolynomial c0, c1;
};

KClassTP1 stab_class(Chamber ch, int point);  // the envelope of p_point
LaurentPolynomial restrict_class(const KClassTP1& c, int point);

using Mat = std::vector<std::vector<FactoredRational>>;

Mat stab_matrix(Chamber ch);  // column j = restrictions of Stab(p_j)

// R = Stab_-^{-1} Stab_+ (2x2), and the displayed closed form
Mat r_matrix();
Mat r_matrix_displayed();

Mat mat_mul(const Mat& a, const Mat& b, long long budget = 1'000'000);
Mat mat_inverse2(const Mat& m);
bool mat_equal(const Mat& a, const Mat& b, const RunConfig& cfg, Rng& rng);

bool entries_check(const RunConfig& cfg, Rng& rng);
bool unitarity_check(const RunConfig& cfg, Rng& rng);
// R12 R13 R23 = R23 R13 R12 on (C^2)^x3 over {a1,a2,a3,h}; tries the
// alternate middle-block ordering on failure, errors when both fail
bool yang_baxter_check(const RunConfig& cfg, Rng& rng);
bool degree_axiom_check(const Rational& eps);
// transposed-opposite envelope against Stab_+ under the localization
// pairing; strip_normalization drops the hbar^{-1/2} factor (negative
// control, must fail)
bool diagonal_decomposition_check(bool strip_normalization,
                                  const RunConfig& cfg, Rng& rng);

}  // namespace kenum::stab
