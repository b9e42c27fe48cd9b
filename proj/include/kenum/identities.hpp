#pragma once

// Closed-form identity verifications: the q-binomial theorem and the
// eleven-dimensional supergravity character computation.

#include "kenum/config.hpp"
#include "kenum/core.hpp"
#include "kenum/factored.hpp"
#include "kenum/series.hpp"

#include <string>

namespace kenum::ids {

struct IdentityReport {
  std::string name;
  int order = 0;
  bool verdict = false;
  std::string first_mismatch;  // empty when verdict is true
  std::string lhs_repr, rhs_repr;
};

// sum form: coefficients prod_{i<=n} (1-m t^i)/(1-t^i)
FactoredSeries qbinomial_sum_form(int order);
// plethystic form: S^.( z (1-mt)/(1-t) )
FactoredSeries qbinomial_pleth_form(int order);
// truncated product form prod_{k=0..K} (1-z m t^{k+1})/(1-z t^k);
// z-coefficients are polynomials in t,m (exact through t-degree K)
LaurentSeries qbinomial_product_form(int order, int product_depth);

// three-way equality: sum = pleth exactly; product pinned to the sum by the
// boundary-corrected difference-equation certificate plus t-adic agreement
IdentityReport qbinomial_check(int order, const RunConfig& cfg, Rng& rng);

// (1-z) f(z) = (1-zmt) f(tz) for the sum form (exact) and the truncated
// product (exact boundary-corrected certificate)
IdentityReport qbinomial_difference_equation(int order, const RunConfig& cfg,
                                             Rng& rng);

// spinor characters of so(10) restricted to the maximal torus of GL(5)
std::pair<LaurentPolynomial, LaurentPolynomial> spinor_characters();

// field content M_+/- equals -W (x) Lambda^. W resp. W* (x) Lambda^. W after
// imposing t1..t5 = 1 with the chosen square-root branch
IdentityReport mtheory_identity_check(int branch = +1);

// S^2 and Lambda^k of explicit characters by Adams/Newton formulas
LaurentPolynomial sym2(const LaurentPolynomial& v);
LaurentPolynomial lam2(const LaurentPolynomial& v);
LaurentPolynomial lam3(const LaurentPolynomial& v);

}  // namespace kenum::ids
