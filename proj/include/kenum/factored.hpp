#pragma once

// Rational functions kept in factored form: a rational-scalar monomial
// prefactor times a list of polynomial factors with integer multiplicities
// (negative ones form the denominator). Localization weights arrive exactly
// in this shape, and no multivariate gcd is ever computed: cancellation is
// syntactic matching of canonically normalized factors.

#include "kenum/config.hpp"
#include "kenum/core.hpp"

#include <map>
#include <vector>

namespace kenum {

class FactoredRational {
public:
  FactoredRational() = default;
  explicit FactoredRational(VariableSet vars);

  static FactoredRational one(const VariableSet& vars);
  static FactoredRational zero(const VariableSet& vars);
  static FactoredRational from_scalar(const VariableSet& vars, Rational c);
  static FactoredRational from_monomial(const VariableSet& vars, Monomial m,
                                        Rational c = 1);
  static FactoredRational from_poly(const LaurentPolynomial& p);

  const VariableSet& vars() const { return vars_; }
  bool is_zero() const { return coef_ == 0; }
  const Rational& coef() const { return coef_; }
  const Monomial& prefactor_monomial() const { return mono_; }
  const std::vector<std::pair<LaurentPolynomial, int>>& factors() const {
    return factors_;
  }

  // Multiplies a factor in, normalizing its sign/content and cancelling
  // against existing entries. mult may be negative.
  void push_factor(const LaurentPolynomial& p, int mult);

  FactoredRational operator*(const FactoredRational& o) const;
  FactoredRational operator/(const FactoredRational& o) const;
  FactoredRational operator*(const Rational& c) const;
  FactoredRational inverse() const;
  FactoredRational operator-() const { return *this * Rational(-1); }

  // Fraction addition: common factors split off syntactically, the cross
  // numerators expanded (guarded by `budget` terms) and re-wrapped.
  FactoredRational add(const FactoredRational& o, long long budget) const;

  FactoredRational bar() const;
  FactoredRational adams(int n) const;
  FactoredRational pow(int n) const;  // any sign

  // Numerator / denominator as honest polynomials (expanded), prefactor
  // included in the numerator (negative prefactor exponents go to den).
  LaurentPolynomial numerator_expanded(long long budget) const;
  LaurentPolynomial denominator_expanded(long long budget) const;

  // Expands the whole value; NonDivisible if it is not a Laurent polynomial.
  LaurentPolynomial expand_to_polynomial(long long budget) const;

  // Exact value; PoleAtPoint when the denominator vanishes deeper than the
  // numerator (a balanced zero also reports PoleAtPoint: callers resample).
  Rational evaluate(const EvalPoint& p) const;

  // Vanishing order bookkeeping for evaluate: >0 zero, <0 pole, 0 regular.
  int zero_order_at(const EvalPoint& p) const;

  // Doubled-exponent spans of numerator/denominator (sum of factor spans
  // plus prefactor) -- the degree bound that accompanies multi-point
  // equality decisions.
  void span_bound(std::vector<int32_t>& lo, std::vector<int32_t>& hi) const;

  std::string to_string() const;

private:
  VariableSet vars_;
  Rational coef_ = 1;
  Monomial mono_;
  // canonical factors (monomial content pulled out, integer content pulled
  // out, lex-leading coefficient positive), kept sorted & merged
  std::vector<std::pair<LaurentPolynomial, int>> factors_;
};

// A sum of factored rationals kept as a list; the representation of
// localization series coefficients when a common denominator would explode.
class RationalSum {
public:
  RationalSum() = default;
  explicit RationalSum(VariableSet vars) : vars_(std::move(vars)) {}
  explicit RationalSum(FactoredRational f) : vars_(f.vars()) {
    if (!f.is_zero()) parts_.push_back(std::move(f));
  }

  static RationalSum zero(const VariableSet& vars) {
    return RationalSum(vars);
  }
  static RationalSum one(const VariableSet& vars) {
    return RationalSum(FactoredRational::one(vars));
  }

  const VariableSet& vars() const { return vars_; }
  const std::vector<FactoredRational>& parts() const { return parts_; }
  bool is_syntactic_zero() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }

  RationalSum operator+(const RationalSum& o) const;
  RationalSum operator-(const RationalSum& o) const;
  RationalSum operator*(const RationalSum& o) const;
  RationalSum operator*(const Rational& c) const;
  RationalSum operator*(const FactoredRational& f) const;
  RationalSum operator/(const FactoredRational& f) const;

  RationalSum adams(int n) const;

  Rational evaluate(const EvalPoint& p) const;

  // Collapses the list into one fraction via repeated add(); fails over the
  // budget (callers fall back to the list form).
  FactoredRational collapse(long long budget) const;

private:
  VariableSet vars_;
  std::vector<FactoredRational> parts_;
};

// ---------------------------------------------------------------------------
// Equality decisions. Clearing when the term budget allows, otherwise exact
// multi-point evaluation at seeded prime-square points together with span
// bounds. Every decision is exact rational arithmetic.

struct EqReport {
  bool equal = false;
  bool cleared = false;   // true: decided by full clearing
  int points_used = 0;
  std::vector<int32_t> span_lo, span_hi;  // recorded degree bound
};

EqReport decide_equal(const RationalSum& lhs, const RationalSum& rhs,
                      const RunConfig& cfg, Rng& rng);
inline EqReport decide_equal(const FactoredRational& a,
                             const FactoredRational& b, const RunConfig& cfg,
                             Rng& rng) {
  return decide_equal(RationalSum(a), RationalSum(b), cfg, rng);
}
bool fr_equal(const FactoredRational& a, const FactoredRational& b,
              const RunConfig& cfg, Rng& rng);

// ---------------------------------------------------------------------------
// Cone expansion of a factored rational: every variable is sent to 0 or to
// infinity; denominator factors must have a unique extreme monomial there.

enum class ConeDir { AtZero, AtInfinity };

LaurentPolynomial expand_in_cone(const FactoredRational& r,
                                 const std::map<std::string, ConeDir>& dirs,
                                 int order);

}  // namespace kenum
