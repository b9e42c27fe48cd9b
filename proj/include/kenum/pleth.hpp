#pragma once

// Plethystic exponential/logarithm, exterior algebra, symmetrized symmetric
// algebra and the a-hat genus, all on the exact half-lattice rings.

#include "kenum/core.hpp"
#include "kenum/factored.hpp"
#include "kenum/series.hpp"

namespace kenum::pleth {

int mobius(int n);

// exact integer coefficient or Internal error
long to_int(const Rational& c);

// ---------------------------------------------------------------------------
// Generic plethystics on truncated series. The counting variable carries
// torus weight: the Adams operation scales it together with the coefficient
// variables (adams_all).

template <class C>
TruncatedSeries<C> pleth_exp_series(const TruncatedSeries<C>& g) {
  if (!coeff_is_zero(g[0]))
    fail(ErrorKind::ZeroWeightPresent,
         "plethystic exponential needs a vanishing degree-0 part");
  TruncatedSeries<C> h(g.var(), g.order(), coeff_zero_like(g[0]), g.budget());
  for (int n = 1; n <= g.order(); ++n)
    h = h + g.adams_all(n).scaled(Rational(1, n));
  return h.exp();
}

template <class C>
TruncatedSeries<C> pleth_log_series(const TruncatedSeries<C>& f) {
  TruncatedSeries<C> l = f.log();  // ConstantTermNotOne when f[0] != 1
  TruncatedSeries<C> out(f.var(), f.order(), coeff_zero_like(f[0]),
                         f.budget());
  for (int m = 1; m <= f.order(); ++m) {
    C acc = coeff_zero_like(f[0]);
    for (int n = 1; n <= m; ++n) {
      if (m % n != 0) continue;
      int mu = mobius(n);
      if (mu == 0) continue;
      acc = coeff_add(acc,
                      coeff_scale(coeff_adams(l[m / n], n), Rational(mu, n)),
                      f.budget());
    }
    out.set(m, std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graded characters (Laurent coefficients) and the spec-facing operations.

struct GradedCharacter {
  LaurentSeries series;
  bool zero_weight_flag = false;  // some coefficient contains t^0

  // validates: degree-0 part vanishes OR no coefficient contains t^0
  static GradedCharacter from_series(LaurentSeries s);
};

// S^. of a finite character with no trivial weight: prod (1-t^mu)^(-mult).
FactoredRational sym_alg(const LaurentPolynomial& v);

// Lambda^. : prod (1-t^mu)^(mult); a positive trivial weight gives 0.
FactoredRational ext_alg(const LaurentPolynomial& v);

// S-hat = (det v)^(1/2) S^.(v)
FactoredRational sym_hat(const LaurentPolynomial& v);

// a-hat genus: prod (w^(1/2)-w^(-1/2))^(-mult); needs integer exponents
// and no trivial weight.
FactoredRational aroof(const LaurentPolynomial& v);

// Plethystic exponential of a graded character. The degree-0 part, when it
// is a nonzero character without trivial weight, contributes the closed
// S^.(g_0) prefactor; a trivial weight in degree 0 is ZeroWeightPresent.
FactoredSeries pleth_exp(const GradedCharacter& g, int order,
                         long long budget = 1'000'000);

// Inverse (Moebius formula); input constant term must be 1.
GradedCharacter pleth_log(const LaurentSeries& f);

}  // namespace kenum::pleth
