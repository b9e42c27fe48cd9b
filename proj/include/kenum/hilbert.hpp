#pragma once

// Fixed-point (virtual) tangent characters and localization series for
// Hilbert schemes of points on C^2, C^3 and P^n. The per-fixed-point weight
// sweeps exist in a serial reference form and an OpenMP form; both produce
// byte-identical results in a fixed enumeration order.

#include "kenum/config.hpp"
#include "kenum/core.hpp"
#include "kenum/factored.hpp"
#include "kenum/partitions.hpp"
#include "kenum/pleth.hpp"
#include "kenum/series.hpp"

namespace kenum::hilb {

enum class KernelMode { Serial, Parallel };

const VariableSet& c2_vars();   // {t1,t2}
const VariableSet& c3_vars();   // {t1,t2,t3}
const VariableSet& c2m_vars();  // {t1,t2,m}
const VariableSet& kappa_var(); // {kappa}
const VariableSet& s3_vars();   // {s1,s2,s3}

// --- C^2 -------------------------------------------------------------------

// Tlam closed form: V + Vbar t1 t2 - V Vbar (1-t1)(1-t2)
LaurentPolynomial tangent_c2_closed(const parts::Partition& lam);
// arm/leg form: sum over boxes of t1^{-l} t2^{a+1} + t1^{l+1} t2^{-a}
LaurentPolynomial tangent_c2_armleg(const parts::Partition& lam);

// --- C^3 -------------------------------------------------------------------

// Tpi: V - kappa Vbar - V Vbar (1-t1)(1-t2)(1-t3)
LaurentPolynomial virtual_tangent_c3(const parts::PlanePartition& pp);
// Tpi2 route through the smooth ambient tangent T = (C^3-1) Vbar V + V
LaurentPolynomial virtual_tangent_c3_ncl(const parts::PlanePartition& pp);
// the ambient tangent itself (honest module: checked nonnegative, no t^0)
LaurentPolynomial ambient_tangent_c3(const parts::PlanePartition& pp);

struct LocalizationWeight {
  parts::PlanePartition fixed_point;
  FactoredRational ovir;  // prod (1-w/kappa)/(1-1/w) over ambient weights
  FactoredRational ohat;  // (-1)^{|pi|} a-hat(T^vir)
};
LocalizationWeight localization_weights(const parts::PlanePartition& pp);

FactoredRational aroof_weight(const parts::PlanePartition& pp);  // a-hat(T^vir)

// all (-1)^n a-hat(T^vir_pi) for |pi| = n, in enumeration order
std::vector<FactoredRational> ohat_for_size(int n, KernelMode mode);

// Z(C^3, points): coefficient of z^n kept as the per-fixed-point list
SumSeries z_series_c3(int order, KernelMode mode = KernelMode::Serial);

// S^. of the five-variable a-hat class with t4 = z k^{-1/2}, t5 = 1/(z k^{1/2})
FactoredSeries nekrasov_rhs(int order);

// the C^3 tangent-frame factor prod_i ((k/t_i)^{1/2}-(t_i/k)^{1/2})/(t_i^{1/2}-t_i^{-1/2})
FactoredRational star_frame_factor();

struct StarCoefficients {
  // coefficient of z^n as a Laurent polynomial in kappa^{1/2}, n = 1..order
  std::vector<LaurentPolynomial> coeffs;
};
// Extracts the kappa-only series from the localization side and verifies it
// against -z/((1-k^{1/2}z)(1-k^{-1/2}z)); NonPolynomialStar when the
// division does not close.
StarCoefficients star_extract(int order, const RunConfig& cfg, Rng& rng);
// the expected coefficient from the closed fraction
LaurentPolynomial star_expected_coeff(int n);

// a-hat(T^vir_pi) vanishes on the locus t1 t2 = 1 (exact zeros at seeded
// points; generic off-locus points are nonzero)
bool rigidity_vanish_check(const parts::PlanePartition& pp, int trials,
                           Rng& rng);

// --- Hilb(C^2) with Omega insertions ----------------------------------------

SumSeries z_series_hilb_c2_localization(int order);
FactoredSeries z_series_hilb_c2_closed(int order);

// --- P^n warm-up -------------------------------------------------------------

// chi(P^n, O(k)) by localization; returns the denominator-free character
LaurentPolynomial chi_projective_space(int n, int k);
// independent oracle: sections basis for k >= 0, zero for -n <= k < 0
LaurentPolynomial chi_projective_space_sections(int n, int k);

// --- cohomological limit ------------------------------------------------------

struct CohLimitReport {
  bool ok = false;
  std::vector<RationalSum> e_coeffs;   // E_n(s), n = 1..order
  bool oracle_ok = false;              // epsilon-series spot check
};
CohLimitReport cohomological_limit_check(int order, const RunConfig& cfg,
                                         Rng& rng);

}  // namespace kenum::hilb
