#include "kenum/pleth.hpp"

namespace kenum::pleth {

int mobius(int n) {
  if (n < 1) fail(ErrorKind::Internal, "mobius of nonpositive");
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

long to_int(const Rational& c) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  if (denominator(c) != 1)
    fail(ErrorKind::Internal, "expected integer multiplicity");
  return static_cast<long>(numerator(c));
}

GradedCharacter GradedCharacter::from_series(LaurentSeries s) {
  GradedCharacter g{std::move(s), false};
  bool deg0_zero = g.series[0].is_zero();
  for (int k = 0; k <= g.series.order(); ++k) {
    if (g.series[k].coeff(Monomial(g.series[k].vars().size())) != 0)
      g.zero_weight_flag = true;
  }
  if (!deg0_zero && g.zero_weight_flag)
    fail(ErrorKind::ZeroWeightPresent,
         "graded character has a nonzero degree-0 part and a trivial weight");
  return g;
}

FactoredRational ext_alg(const LaurentPolynomial& v) {
  FactoredRational r = FactoredRational::one(v.vars());
  for (const auto& [m, c] : v.terms()) {
    long mult = to_int(c);
    if (m.is_trivial()) {
      if (mult > 0) return FactoredRational::zero(v.vars());
      fail(ErrorKind::TrivialWeight,
           "exterior algebra of a negative trivial weight is singular");
    }
    LaurentPolynomial f = LaurentPolynomial::constant(v.vars(), 1) -
                          LaurentPolynomial::term(v.vars(), m, 1);
    r.push_factor(f, static_cast<int>(mult));
  }
  return r;
}

FactoredRational sym_alg(const LaurentPolynomial& v) {
  FactoredRational r = FactoredRational::one(v.vars());
  for (const auto& [m, c] : v.terms()) {
    long mult = to_int(c);
    if (m.is_trivial())
      fail(ErrorKind::ZeroWeightPresent,
           "symmetric algebra needs mu = 0 absent");
    LaurentPolynomial f = LaurentPolynomial::constant(v.vars(), 1) -
                          LaurentPolynomial::term(v.vars(), m, 1);
    r.push_factor(f, static_cast<int>(-mult));
  }
  return r;
}

FactoredRational sym_hat(const LaurentPolynomial& v) {
  // det v = t^(sum mult*mu); its square root must stay on the lattice
  Monomial det(v.vars().size());
  for (const auto& [m, c] : v.terms()) {
    long mult = to_int(c);
    for (size_t i = 0; i < det.e.size(); ++i)
      det.e[i] += static_cast<int32_t>(mult) * m.e[i];
  }
  Monomial half(v.vars().size());
  for (size_t i = 0; i < det.e.size(); ++i) {
    if (det.e[i] % 2 != 0)
      fail(ErrorKind::NonSquareBase, "det has no square root on the lattice");
    half.e[i] = det.e[i] / 2;
  }
  return sym_alg(v) * FactoredRational::from_monomial(v.vars(), half);
}

FactoredRational aroof(const LaurentPolynomial& v) {
  FactoredRational r = FactoredRational::one(v.vars());
  for (const auto& [m, c] : v.terms()) {
    long mult = to_int(c);
    if (m.is_trivial())
      fail(ErrorKind::TrivialWeight, "a-hat needs a trivial-weight-free input");
    Monomial half(v.vars().size());
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] % 2 != 0)
        fail(ErrorKind::NonSquareBase,
             "a-hat weight has no square root on the lattice");
      half.e[i] = m.e[i] / 2;
    }
    // w^(1/2) - w^(-1/2)
    LaurentPolynomial f = LaurentPolynomial::term(v.vars(), half, 1) -
                          LaurentPolynomial::term(v.vars(), -half, 1);
    r.push_factor(f, static_cast<int>(-mult));
  }
  return r;
}

FactoredSeries pleth_exp(const GradedCharacter& g, int order,
                         long long budget) {
  if (order > 12)
    fail(ErrorKind::BoundExceeded, "plethystic order is guarded at 12");
  const LaurentSeries& s = g.series;
  if (order > s.order())
    fail(ErrorKind::BoundExceeded, "requested order exceeds the input series");
  const VariableSet& vars = s[0].vars();

  FactoredRational head = FactoredRational::one(vars);
  LaurentSeries body("z#", order, LaurentPolynomial::zero(vars), budget);
  for (int k = 1; k <= order; ++k) body.set(k, s[k]);
  if (!s[0].is_zero()) head = sym_alg(s[0]);  // ZeroWeightPresent inside

  LaurentSeries e = pleth_exp_series(body);
  FactoredSeries out(s.var(), order, FactoredRational::zero(vars), budget);
  for (int k = 0; k <= order; ++k)
    out.set(k, FactoredRational::from_poly(e[k]) * head);
  return out;
}

GradedCharacter pleth_log(const LaurentSeries& f) {
  return GradedCharacter::from_series(pleth_log_series(f));
}

}  // namespace kenum::pleth
