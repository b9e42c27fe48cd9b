#include "kenum/factored.hpp"

#include <algorithm>
#include <sstream>

namespace kenum {

namespace {

// integer content of a set of rationals: gcd(numerators)/lcm(denominators)
Rational rational_content(const LaurentPolynomial& p) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Integer g = 0, l = 1;
  for (const auto& [m, c] : p.terms()) {
    g = gcd(g, numerator(c) < 0 ? Integer(-numerator(c)) : numerator(c));
    l = lcm(l, denominator(c));
  }
  if (g == 0) g = 1;
  return Rational(g, l);
}

bool poly_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first < ib->first) return true;
    if (ib->first < ia->first) return false;
    if (ia->second < ib->second) return true;
    if (ib->second < ia->second) return false;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

long long checked_mul(long long a, long long b, long long cap) {
  if (a <= 0 || b <= 0) return 0;
  if (a > cap / b) return cap + 1;
  return a * b;
}

}  // namespace

// ---------------------------------------------------------------------------
// FactoredRational

FactoredRational::FactoredRational(VariableSet vars)
    : vars_(std::move(vars)), mono_(vars_.size()) {}

FactoredRational FactoredRational::one(const VariableSet& vars) {
  return FactoredRational(vars);
}

FactoredRational FactoredRational::zero(const VariableSet& vars) {
  FactoredRational f(vars);
  f.coef_ = 0;
  return f;
}

FactoredRational FactoredRational::from_scalar(const VariableSet& vars,
                                               Rational c) {
  FactoredRational f(vars);
  f.coef_ = std::move(c);
  return f;
}

FactoredRational FactoredRational::from_monomial(const VariableSet& vars,
                                                 Monomial m, Rational c) {
  FactoredRational f(vars);
  f.coef_ = std::move(c);
  f.mono_ = std::move(m);
  if (f.coef_ == 0) f.mono_ = Monomial(vars.size());
  return f;
}

FactoredRational FactoredRational::from_poly(const LaurentPolynomial& p) {
  FactoredRational f(p.vars());
  if (p.is_zero()) {
    f.coef_ = 0;
    return f;
  }
  f.push_factor(p, 1);
  return f;
}

// canonical form of a factor: pull the componentwise-min monomial, divide by
// the rational content, flip sign so that the lex-leading coefficient is
// positive. Returns the pulled (monomial, scalar).
static std::pair<Monomial, Rational> canonicalize_factor(
    LaurentPolynomial& p) {
  std::vector<int32_t> lo, hi;
  p.exponent_span(lo, hi);
  Monomial shift{lo};
  Rational content = rational_content(p);
  if (p.leading_term().second < 0) content = -content;
  LaurentPolynomial q = p.mul_term(-shift, Rational(1) / content);
  p = std::move(q);
  return {shift, content};
}

void FactoredRational::push_factor(const LaurentPolynomial& p, int mult) {
  if (coef_ == 0 || mult == 0) return;
  if (!vars_.same_as(p.vars()))
    fail(ErrorKind::Internal, "factor variable set mismatch");
  if (p.is_zero()) fail(ErrorKind::Internal, "zero factor");
  if (p.term_count() == 1) {  // a bare monomial folds into the prefactor
    auto [m, c] = p.single_term();
    if (mult >= 0) {
      for (int k = 0; k < mult; ++k) {
        mono_ = mono_ + m;
        coef_ *= c;
      }
    } else {
      for (int k = 0; k < -mult; ++k) {
        mono_ = mono_ - m;
        coef_ /= c;
      }
    }
    return;
  }
  LaurentPolynomial q = p;
  auto [shift, content] = canonicalize_factor(q);
  // fold the pulled monomial/scalar
  mono_ = mono_ + shift.scaled(mult);
  Rational cpow = 1;
  for (int k = 0; k < (mult < 0 ? -mult : mult); ++k) cpow *= content;
  if (mult >= 0) coef_ *= cpow;
  else coef_ /= cpow;
  // merge into the sorted factor list
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), q,
      [](const auto& a, const LaurentPolynomial& b) {
        return poly_less(a.first, b);
      });
  if (it != factors_.end() && it->first == q) {
    it->second += mult;
    if (it->second == 0) factors_.erase(it);
  } else {
    factors_.insert(it, {std::move(q), mult});
  }
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
  if (!vars_.same_as(o.vars_)) fail(ErrorKind::Internal, "vars mismatch");
  if (coef_ == 0 || o.coef_ == 0) return zero(vars_);
  FactoredRational r(*this);
  r.coef_ *= o.coef_;
  r.mono_ = r.mono_ + o.mono_;
  for (const auto& [p, m] : o.factors_) r.push_factor(p, m);
  return r;
}

FactoredRational FactoredRational::inverse() const {
  if (coef_ == 0) fail(ErrorKind::Internal, "inverse of zero");
  FactoredRational r(vars_);
  r.coef_ = Rational(1) / coef_;
  r.mono_ = -mono_;
  for (const auto& [p, m] : factors_) r.factors_.push_back({p, -m});
  return r;
}

FactoredRational FactoredRational::operator/(const FactoredRational& o) const {
  return *this * o.inverse();
}

FactoredRational FactoredRational::operator*(const Rational& c) const {
  if (c == 0) return zero(vars_);
  FactoredRational r(*this);
  if (r.coef_ == 0) return r;
  r.coef_ *= c;
  return r;
}

FactoredRational FactoredRational::bar() const {
  FactoredRational r(vars_);
  r.coef_ = coef_;
  r.mono_ = -mono_;
  for (const auto& [p, m] : factors_) r.push_factor(p.bar(), m);
  return r;
}

FactoredRational FactoredRational::adams(int n) const {
  FactoredRational r(vars_);
  r.coef_ = coef_;
  r.mono_ = mono_.scaled(n);
  for (const auto& [p, m] : factors_) r.push_factor(p.adams(n), m);
  return r;
}

FactoredRational FactoredRational::pow(int n) const {
  if (n == 0) return one(vars_);
  bool inv = n < 0;
  if (inv) n = -n;
  FactoredRational base = inv ? inverse() : *this;
  FactoredRational r = base;
  for (int k = 1; k < n; ++k) r = r * base;
  return r;
}

LaurentPolynomial FactoredRational::numerator_expanded(
    long long budget) const {
  using std::max;
  LaurentPolynomial acc = LaurentPolynomial::constant(vars_, coef_);
  Monomial pos(vars_.size()), neg(vars_.size());
  for (int i = 0; i < vars_.size(); ++i)
    (mono_.e[i] >= 0 ? pos.e[i] : neg.e[i]) = mono_.e[i];
  acc = acc.mul_term(pos, 1);
  long long est = 1;
  for (const auto& [p, m] : factors_) {
    for (int k = 0; k < m; ++k) {
      est = checked_mul(est, p.term_count(), budget);
      if (est > budget)
        fail(ErrorKind::BoundExceeded, "numerator expansion over budget");
      acc = acc * p;
      est = acc.term_count();
      if (est > budget)
        fail(ErrorKind::BoundExceeded, "numerator expansion over budget");
    }
  }
  return acc;
}

LaurentPolynomial FactoredRational::denominator_expanded(
    long long budget) const {
  LaurentPolynomial acc = LaurentPolynomial::constant(vars_, 1);
  Monomial neg(vars_.size());
  for (int i = 0; i < vars_.size(); ++i)
    if (mono_.e[i] < 0) neg.e[i] = -mono_.e[i];
  acc = acc.mul_term(neg, 1);
  long long est = 1;
  for (const auto& [p, m] : factors_) {
    for (int k = 0; k < -m; ++k) {
      est = checked_mul(est, p.term_count(), budget);
      if (est > budget)
        fail(ErrorKind::BoundExceeded, "denominator expansion over budget");
      acc = acc * p;
      est = acc.term_count();
      if (est > budget)
        fail(ErrorKind::BoundExceeded, "denominator expansion over budget");
    }
  }
  return acc;
}

LaurentPolynomial FactoredRational::expand_to_polynomial(
    long long budget) const {
  LaurentPolynomial num = numerator_expanded(budget);
  LaurentPolynomial den = denominator_expanded(budget);
  if (den.is_one()) return num;
  return num.exact_divide(den);
}

int FactoredRational::zero_order_at(const EvalPoint& p) const {
  if (coef_ == 0) return 1;
  int order = 0;
  for (const auto& [f, m] : factors_) {
    if (f.evaluate(p) == 0) order += m;
  }
  return order;
}

Rational FactoredRational::evaluate(const EvalPoint& p) const {
  if (coef_ == 0) return 0;
  int order = 0;
  bool any_vanishing = false;
  Rational v = coef_ * p.eval_monomial(mono_);
  for (const auto& [f, m] : factors_) {
    Rational fv = f.evaluate(p);
    if (fv == 0) {
      order += m;
      any_vanishing = true;
      continue;
    }
    if (m >= 0)
      for (int k = 0; k < m; ++k) v *= fv;
    else
      for (int k = 0; k < -m; ++k) v /= fv;
  }
  if (order > 0) return 0;
  if (order < 0) fail(ErrorKind::PoleAtPoint, "denominator vanishes at point");
  if (any_vanishing)
    fail(ErrorKind::PoleAtPoint, "indeterminate 0/0 at point");
  return v;
}

void FactoredRational::span_bound(std::vector<int32_t>& lo,
                                  std::vector<int32_t>& hi) const {
  lo.assign(vars_.size(), 0);
  hi.assign(vars_.size(), 0);
  for (int i = 0; i < vars_.size(); ++i) {
    lo[i] = std::min<int32_t>(mono_.e[i], 0);
    hi[i] = std::max<int32_t>(mono_.e[i], 0);
  }
  std::vector<int32_t> flo, fhi;
  for (const auto& [p, m] : factors_) {
    p.exponent_span(flo, fhi);
    int mm = m < 0 ? -m : m;
    for (int i = 0; i < vars_.size(); ++i) {
      lo[i] -= mm * std::max(std::abs(flo[i]), std::abs(fhi[i]));
      hi[i] += mm * std::max(std::abs(flo[i]), std::abs(fhi[i]));
    }
  }
}

FactoredRational FactoredRational::add(const FactoredRational& o,
                                       long long budget) const {
  if (!vars_.same_as(o.vars_)) fail(ErrorKind::Internal, "vars mismatch");
  if (coef_ == 0) return o;
  if (o.coef_ == 0) return *this;
  // split the common part C: min multiplicities of shared factors, plus the
  // componentwise-min of the prefactor monomials
  FactoredRational common(vars_);
  FactoredRational ra(vars_), rb(vars_);
  ra.coef_ = coef_;
  rb.coef_ = o.coef_;
  for (int i = 0; i < vars_.size(); ++i) {
    int32_t c = std::min(mono_.e[i], o.mono_.e[i]);
    common.mono_.e[i] = c;
    ra.mono_.e[i] = mono_.e[i] - c;
    rb.mono_.e[i] = o.mono_.e[i] - c;
  }
  size_t ia = 0, ib = 0;
  while (ia < factors_.size() || ib < o.factors_.size()) {
    if (ib == o.factors_.size() ||
        (ia < factors_.size() &&
         poly_less(factors_[ia].first, o.factors_[ib].first))) {
      ra.factors_.push_back(factors_[ia++]);
    } else if (ia == factors_.size() ||
               poly_less(o.factors_[ib].first, factors_[ia].first)) {
      rb.factors_.push_back(o.factors_[ib++]);
    } else {
      int ma = factors_[ia].second, mb = o.factors_[ib].second;
      int c = std::min(ma, mb);
      common.factors_.push_back({factors_[ia].first, c});
      if (ma != c) ra.factors_.push_back({factors_[ia].first, ma - c});
      if (mb != c) rb.factors_.push_back({o.factors_[ib].first, mb - c});
      ++ia, ++ib;
    }
  }
  // now *this + o = common * (ra + rb) with ra, rb sharing nothing;
  // ra + rb = (num(ra) den(rb) + num(rb) den(ra)) / (den(ra) den(rb))
  LaurentPolynomial cross = ra.numerator_expanded(budget) *
                                rb.denominator_expanded(budget) +
                            rb.numerator_expanded(budget) *
                                ra.denominator_expanded(budget);
  FactoredRational result = common;
  if (cross.is_zero()) return zero(vars_);
  result.push_factor(cross, 1);
  for (const auto& [p, m] : ra.factors_)
    if (m < 0) result.push_factor(p, m);
  for (const auto& [p, m] : rb.factors_)
    if (m < 0) result.push_factor(p, m);
  // the pure-monomial denominators of ra/rb were already folded into
  // numerator_expanded/denominator_expanded via the prefactor split
  Monomial da(vars_.size()), db(vars_.size());
  for (int i = 0; i < vars_.size(); ++i) {
    if (ra.mono_.e[i] < 0) da.e[i] = ra.mono_.e[i];
    if (rb.mono_.e[i] < 0) db.e[i] = rb.mono_.e[i];
  }
  result.mono_ = result.mono_ + da + db;
  return result;
}

std::string FactoredRational::to_string() const {
  if (coef_ == 0) return "0";
  std::ostringstream os;
  os << LaurentPolynomial::term(vars_, mono_, coef_).to_string();
  for (const auto& [p, m] : factors_)
    os << " * (" << p.to_string() << ")^" << m;
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalSum

RationalSum RationalSum::operator+(const RationalSum& o) const {
  RationalSum r(*this);
  for (const auto& f : o.parts_) {
    if (!f.is_zero()) r.parts_.push_back(f);
  }
  return r;
}

RationalSum RationalSum::operator-(const RationalSum& o) const {
  RationalSum r(*this);
  for (const auto& f : o.parts_) {
    if (!f.is_zero()) r.parts_.push_back(-f);
  }
  return r;
}

RationalSum RationalSum::operator*(const RationalSum& o) const {
  RationalSum r(vars_);
  for (const auto& a : parts_)
    for (const auto& b : o.parts_) {
      auto p = a * b;
      if (!p.is_zero()) r.parts_.push_back(std::move(p));
    }
  return r;
}

RationalSum RationalSum::operator*(const Rational& c) const {
  if (c == 0) return RationalSum(vars_);
  RationalSum r(vars_);
  for (const auto& a : parts_) r.parts_.push_back(a * c);
  return r;
}

RationalSum RationalSum::operator*(const FactoredRational& f) const {
  if (f.is_zero()) return RationalSum(vars_);
  RationalSum r(vars_);
  for (const auto& a : parts_) r.parts_.push_back(a * f);
  return r;
}

RationalSum RationalSum::operator/(const FactoredRational& f) const {
  RationalSum r(vars_);
  for (const auto& a : parts_) r.parts_.push_back(a / f);
  return r;
}

RationalSum RationalSum::adams(int n) const {
  RationalSum r(vars_);
  for (const auto& a : parts_) r.parts_.push_back(a.adams(n));
  return r;
}

Rational RationalSum::evaluate(const EvalPoint& p) const {
  Rational s = 0;
  for (const auto& a : parts_) s += a.evaluate(p);
  return s;
}

FactoredRational RationalSum::collapse(long long budget) const {
  FactoredRational acc = FactoredRational::zero(vars_);
  for (const auto& a : parts_) acc = acc.add(a, budget);
  return acc;
}

// ---------------------------------------------------------------------------
// Equality

const std::vector<int>& small_primes() {
  static const std::vector<int> ps = {
      2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,  43,  47,  53,
      59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};
  return ps;
}

EvalPoint random_prime_square_point(const VariableSet& vars, Rng& rng) {
  const auto& ps = small_primes();
  std::vector<int> picks;
  std::vector<Rational> sqrt_vals;
  while (static_cast<int>(picks.size()) < vars.size()) {
    int p = ps[rng.below(ps.size())];
    if (std::find(picks.begin(), picks.end(), p) != picks.end()) continue;
    picks.push_back(p);
    // half of the coordinates are inverted to keep magnitudes balanced
    sqrt_vals.push_back(rng.coin() ? Rational(p) : Rational(1, p));
  }
  return EvalPoint(vars, std::move(sqrt_vals));
}

// Number of lattice points in the Newton box of the product of all stated
// factors: the sharp a-priori bound on how many terms full clearing can
// produce (sparse products collapse into this box).
static long long clearing_box_estimate(const RationalSum& diff,
                                       long long cap) {
  const VariableSet& vars = diff.vars();
  std::vector<long long> span(vars.size(), 0);
  std::vector<int32_t> lo, hi;
  for (const auto& part : diff.parts()) {
    part.span_bound(lo, hi);
    for (int i = 0; i < vars.size(); ++i)
      span[i] = std::max(span[i], (long long)hi[i] - lo[i]);
  }
  long long est = 1;
  for (int i = 0; i < vars.size(); ++i) {
    est = checked_mul(est, span[i] + 1, cap);
    if (est > cap) return est;
  }
  // each summand contributes its own expansion work
  est = checked_mul(est, std::max(1, diff.size()), cap);
  return est;
}

EqReport decide_equal(const RationalSum& lhs, const RationalSum& rhs,
                      const RunConfig& cfg, Rng& rng) {
  EqReport rep;
  RationalSum diff = lhs - rhs;
  const VariableSet& vars = diff.vars();
  if (diff.is_syntactic_zero()) {
    rep.equal = true;
    rep.cleared = true;
    return rep;
  }
  // record span bounds of the difference
  rep.span_lo.assign(vars.size(), 0);
  rep.span_hi.assign(vars.size(), 0);
  std::vector<int32_t> lo, hi;
  for (const auto& part : diff.parts()) {
    part.span_bound(lo, hi);
    for (int i = 0; i < vars.size(); ++i) {
      rep.span_lo[i] = std::min(rep.span_lo[i], lo[i]);
      rep.span_hi[i] = std::max(rep.span_hi[i], hi[i]);
    }
  }
  // try full clearing when the Newton-box estimate fits the budget
  if (clearing_box_estimate(diff, cfg.clear_budget) <= cfg.clear_budget) {
    try {
      FactoredRational folded = diff.collapse(cfg.clear_budget);
      rep.cleared = true;
      rep.equal = folded.is_zero();
      return rep;
    } catch (const CalcError& e) {
      if (e.kind != ErrorKind::BoundExceeded) throw;
    }
  }
  // multi-point exact evaluation
  int points = std::max(8, cfg.eq_points);
  int done = 0, attempts = 0;
  while (done < points) {
    if (++attempts > points * 20)
      fail(ErrorKind::PoleAtPoint,
           "could not find enough pole-free evaluation points");
    EvalPoint p = random_prime_square_point(vars, rng);
    try {
      if (diff.evaluate(p) != 0) {
        rep.points_used = done + 1;
        rep.equal = false;
        return rep;
      }
    } catch (const CalcError& e) {
      if (e.kind != ErrorKind::PoleAtPoint) throw;
      continue;  // resample
    }
    ++done;
  }
  rep.points_used = done;
  rep.equal = true;
  return rep;
}

bool fr_equal(const FactoredRational& a, const FactoredRational& b,
              const RunConfig& cfg, Rng& rng) {
  return decide_equal(a, b, cfg, rng).equal;
}

// ---------------------------------------------------------------------------
// Cone expansion

LaurentPolynomial expand_in_cone(const FactoredRational& r,
                                 const std::map<std::string, ConeDir>& dirs,
                                 int order) {
  const VariableSet& vars = r.vars();
  if (order < 0) fail(ErrorKind::BoundExceeded, "negative expansion order");
  if (r.is_zero()) return LaurentPolynomial::zero(vars);
  // cone degree, doubled to stay integral: AtZero counts +e, AtInfinity -e
  std::vector<int> sign(vars.size(), +1);
  for (const auto& [name, d] : dirs) {
    int i = vars.index_of(name);
    if (i < 0) fail(ErrorKind::Internal, "unknown cone variable " + name);
    sign[i] = d == ConeDir::AtZero ? +1 : -1;
  }
  auto cone_deg2 = [&](const Monomial& m) {
    int64_t d = 0;
    for (int i = 0; i < vars.size(); ++i) d += int64_t(sign[i]) * m.e[i];
    return d;
  };
  const int64_t order2 = int64_t(order) * 2;

  // One application step: multiply by a polynomial factor, or by the inverse
  // of one (geometric series around its unique cone-minimal term).
  struct Step {
    LaurentPolynomial poly;
    bool inverted;
    Monomial ext;       // cone-minimal term (inverted steps)
    Rational ext_c;
    int64_t min_contrib2;  // minimal cone degree this step can add
  };
  std::vector<Step> steps;
  for (const auto& [p, mult] : r.factors()) {
    Step s{p, mult < 0, Monomial(vars.size()), 1, 0};
    if (mult < 0) {
      const Monomial* ext = nullptr;
      int64_t best = 0;
      int ties = 0;
      for (const auto& [m, c] : p.terms()) {
        int64_t d = cone_deg2(m);
        if (!ext || d < best) {
          ext = &m;
          s.ext_c = c;
          best = d;
          ties = 1;
        } else if (d == best) {
          ++ties;
        }
      }
      if (ties != 1)
        fail(ErrorKind::NotExpandable,
             "denominator factor has no unique extreme term in the cone");
      s.ext = *ext;
      s.min_contrib2 = -best;
    } else {
      bool first = true;
      for (const auto& [m, c] : p.terms()) {
        int64_t d = cone_deg2(m);
        if (first || d < s.min_contrib2) s.min_contrib2 = d;
        first = false;
      }
    }
    for (int k = 0; k < (mult < 0 ? -mult : mult); ++k) steps.push_back(s);
  }

  // slack[i] = how much the remaining steps after i can still lower degrees
  std::vector<int64_t> slack_after(steps.size() + 1, 0);
  for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i)
    slack_after[i] = slack_after[i + 1] +
                     std::max<int64_t>(0, -steps[i].min_contrib2);

  auto truncate_at = [&](const LaurentPolynomial& p, int64_t bound2) {
    LaurentPolynomial out(vars);
    for (const auto& [m, c] : p.terms())
      if (cone_deg2(m) <= bound2) out.add_term(m, c);
    return out;
  };
  auto min_cone2 = [&](const LaurentPolynomial& p) {
    int64_t d = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      int64_t dd = cone_deg2(m);
      if (first || dd < d) d = dd;
      first = false;
    }
    return d;
  };

  LaurentPolynomial acc =
      LaurentPolynomial::term(vars, r.prefactor_monomial(), r.coef());
  for (size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    int64_t bound2 = order2 + slack_after[i + 1];
    if (!s.inverted) {
      acc = truncate_at(acc * s.poly, bound2);
    } else {
      // 1/p = ext^{-1} / (1 + g), g = (p - ext)/ext, cone_deg2(g) >= 1
      LaurentPolynomial g(vars);
      for (const auto& [m, c] : s.poly.terms()) {
        if (m == s.ext) continue;
        g.add_term(m - s.ext, c / s.ext_c);
      }
      acc = acc.mul_term(-s.ext, Rational(1) / s.ext_c);
      int64_t jmax = bound2 - min_cone2(acc);
      LaurentPolynomial geom = LaurentPolynomial::constant(vars, 1);
      LaurentPolynomial gp = LaurentPolynomial::constant(vars, 1);
      for (int64_t j = 1; j <= jmax; ++j) {
        gp = truncate_at(gp * (-g), bound2 - min_cone2(acc));
        if (gp.is_zero()) break;
        geom = geom + gp;
      }
      acc = truncate_at(acc * geom, bound2);
    }
    if (acc.is_zero()) break;
  }
  return truncate_at(acc, order2);
}

}  // namespace kenum
