#pragma once

// Exact arithmetic for multivariate Laurent polynomials on a half-integer
// exponent lattice. Exponents are stored doubled (lattice denominator 2),
// so t^(3/2) is stored as 3. Coefficients are exact rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kenum {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors

enum class ErrorKind {
  InvalidCommand,
  BoundExceeded,       // SizeLimitExceeded, order guards, WindowTooSmall
  OutOfDomain,         // BoxOutsideDiagram and friends
  NonDivisible,
  NotExpandable,
  PoleAtPoint,
  NonSquareBase,
  NonInvertibleConstantTerm,
  ZeroWeightPresent,
  ConstantTermNotOne,
  TrivialWeight,
  MissingDiagonalVariable,
  EpsilonPoleRemains,
  NonPolynomialStar,
  BasisOrderMismatch,
  GoldenMismatch,
  Io,
  Internal,
};

class CalcError : public std::runtime_error {
public:
  CalcError(ErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  ErrorKind kind;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw CalcError(k, msg);
}

// ---------------------------------------------------------------------------
// VariableSet: ordered variable names over the doubled exponent lattice.
// Shared immutably between all values built on it.

class VariableSet {
public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(data_->names.size()); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(int i) const { return data_->names.at(i); }
  int index_of(const std::string& n) const;        // -1 when absent
  static constexpr int denominator = 2;

  bool same_as(const VariableSet& o) const;

private:
  struct Data {
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_ = std::make_shared<Data>();
};

// ---------------------------------------------------------------------------
// Monomial: doubled exponent vector, one entry per variable.

struct Monomial {
  std::vector<int32_t> e;  // stored exponent; actual exponent is e/2

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int32_t> ee) : e(std::move(ee)) {}

  bool is_trivial() const {
    for (int32_t x : e)
      if (x != 0) return false;
    return true;
  }
  Monomial operator+(const Monomial& o) const;
  Monomial operator-(const Monomial& o) const;
  Monomial operator-() const;
  Monomial scaled(int n) const;  // Adams: multiply exponents by n

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }  // lex
};

// ---------------------------------------------------------------------------
// Evaluation points.  Half-integer exponents require a square-root of every
// coordinate, so a point stores sqrt(t_i) and evaluates t^(e/2) as sqrt^e.

class EvalPoint {
public:
  EvalPoint(VariableSet vars, std::vector<Rational> sqrt_values)
      : vars_(std::move(vars)), s_(std::move(sqrt_values)) {}

  // Builds a point from the values of the variables themselves; each value
  // must be a square of a rational (NonSquareBase otherwise).
  static EvalPoint from_values(const VariableSet& vars,
                               const std::vector<Rational>& values);

  const VariableSet& vars() const { return vars_; }
  const Rational& sqrt_value(int i) const { return s_.at(i); }
  Rational value(int i) const { return s_.at(i) * s_.at(i); }
  Rational eval_monomial(const Monomial& m) const;

private:
  VariableSet vars_;
  std::vector<Rational> s_;
};

// Exact rational square root; nullopt when not a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

// ---------------------------------------------------------------------------
// LaurentPolynomial: finite Monomial -> Rational map, no zero coefficients.

class LaurentPolynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(VariableSet vars) : vars_(std::move(vars)) {}

  static LaurentPolynomial zero(const VariableSet& vars);
  static LaurentPolynomial constant(const VariableSet& vars, Rational c);
  static LaurentPolynomial term(const VariableSet& vars, Monomial m,
                                Rational c);
  // Single variable with doubled exponent e2 (t^(e2/2)).
  static LaurentPolynomial variable(const VariableSet& vars,
                                    const std::string& name, int e2 = 2);

  const VariableSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  // Single-term access; throws Internal unless term_count()==1.
  std::pair<Monomial, Rational> single_term() const;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);  // merges, drops zeros

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rational& c) const;
  LaurentPolynomial mul_term(const Monomial& m, const Rational& c) const;
  bool operator==(const LaurentPolynomial& o) const;

  // Exact Laurent division: returns q with q*o == *this, NonDivisible else.
  LaurentPolynomial exact_divide(const LaurentPolynomial& o) const;

  LaurentPolynomial pow(int n) const;  // n >= 0

  LaurentPolynomial bar() const;          // dual: negate every exponent
  LaurentPolynomial adams(int n) const;   // psi_n: scale every exponent by n

  // Sum of coefficients (value at t=1); the (virtual) rank of a character.
  Rational rank() const;

  // Per-variable doubled-exponent span; {0,0} for absent variables.
  void exponent_span(std::vector<int32_t>& lo, std::vector<int32_t>& hi) const;

  // Linear change of variables into a target set: each source variable i
  // maps to the monomial image[i] over `target`. Must stay on the lattice.
  // half_branch[i], when given, multiplies the coefficient once per odd
  // stored exponent of variable i (the square-root branch of its image).
  LaurentPolynomial remap(const VariableSet& target,
                          const std::vector<Monomial>& image,
                          const std::vector<Rational>& half_branch = {}) const;

  Rational evaluate(const EvalPoint& p) const;

  // Lex-leading (largest) term.
  const std::pair<const Monomial, Rational>& leading_term() const;

  std::string to_string() const;

private:
  void require_same_vars(const LaurentPolynomial& o) const;
  VariableSet vars_;
  TermMap terms_;
};

// Canonical-grammar parser: terms like `-5/3 * t1^2 * t2^(1/2)` joined by +/-.
LaurentPolynomial parse_polynomial(const VariableSet& vars,
                                   const std::string& text);

}  // namespace kenum
