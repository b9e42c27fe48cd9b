#include "kenum/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kenum {

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<std::string> names) {
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        fail(ErrorKind::Internal, "duplicate variable name: " + names[i]);
  auto d = std::make_shared<Data>();
  d->names = std::move(names);
  data_ = std::move(d);
}

int VariableSet::index_of(const std::string& n) const {
  const auto& ns = data_->names;
  for (size_t i = 0; i < ns.size(); ++i)
    if (ns[i] == n) return static_cast<int>(i);
  return -1;
}

bool VariableSet::same_as(const VariableSet& o) const {
  return data_ == o.data_ || data_->names == o.data_->names;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Monomial Monomial::operator-() const {
  Monomial r(*this);
  for (auto& x : r.e) x = -x;
  return r;
}

Monomial Monomial::scaled(int n) const {
  Monomial r(*this);
  for (auto& x : r.e) x *= n;
  return r;
}

// ---------------------------------------------------------------------------
// EvalPoint

std::optional<Rational> rational_sqrt(const Rational& x) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  if (x < 0) return std::nullopt;
  Integer n = numerator(x), d = denominator(x);
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

EvalPoint EvalPoint::from_values(const VariableSet& vars,
                                 const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != vars.size())
    fail(ErrorKind::Internal, "point arity mismatch");
  std::vector<Rational> s;
  s.reserve(values.size());
  for (const auto& v : values) {
    auto r = rational_sqrt(v);
    if (!r)
      fail(ErrorKind::NonSquareBase,
           "value is not a rational square; half-integer exponents need one");
    s.push_back(*r);
  }
  return EvalPoint(vars, std::move(s));
}

Rational EvalPoint::eval_monomial(const Monomial& m) const {
  Rational r = 1;
  for (size_t i = 0; i < m.e.size(); ++i) {
    int32_t e = m.e[i];
    if (e == 0) continue;
    const Rational& b = s_[i];
    if (b == 0) {
      if (e < 0) fail(ErrorKind::PoleAtPoint, "zero base with negative power");
      return 0;
    }
    Rational p = b;
    int32_t a = e < 0 ? -e : e;
    Rational acc = 1;
    while (a > 0) {  // fast pow
      if (a & 1) acc *= p;
      p *= p;
      a >>= 1;
    }
    if (e < 0) acc = Rational(1) / acc;
    r *= acc;
  }
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial LaurentPolynomial::zero(const VariableSet& vars) {
  return LaurentPolynomial(vars);
}

LaurentPolynomial LaurentPolynomial::constant(const VariableSet& vars,
                                              Rational c) {
  LaurentPolynomial p(vars);
  if (c != 0) p.terms_.emplace(Monomial(vars.size()), std::move(c));
  return p;
}

LaurentPolynomial LaurentPolynomial::term(const VariableSet& vars, Monomial m,
                                          Rational c) {
  LaurentPolynomial p(vars);
  if (static_cast<int>(m.e.size()) != vars.size())
    fail(ErrorKind::Internal, "monomial arity mismatch");
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(const VariableSet& vars,
                                              const std::string& name,
                                              int e2) {
  int i = vars.index_of(name);
  if (i < 0) fail(ErrorKind::Internal, "unknown variable " + name);
  Monomial m(vars.size());
  m.e[i] = e2;
  return term(vars, m, 1);
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_trivial() &&
         terms_.begin()->second == 1;
}

std::pair<Monomial, Rational> LaurentPolynomial::single_term() const {
  if (terms_.size() != 1) fail(ErrorKind::Internal, "expected one term");
  return {terms_.begin()->first, terms_.begin()->second};
}

Rational LaurentPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::require_same_vars(const LaurentPolynomial& o) const {
  if (!vars_.same_as(o.vars_))
    fail(ErrorKind::Internal, "variable sets differ");
}

LaurentPolynomial LaurentPolynomial::operator+(
    const LaurentPolynomial& o) const {
  require_same_vars(o);
  LaurentPolynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(
    const LaurentPolynomial& o) const {
  require_same_vars(o);
  LaurentPolynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(
    const LaurentPolynomial& o) const {
  require_same_vars(o);
  LaurentPolynomial r(vars_);
  // iterate over the smaller factor outside
  const LaurentPolynomial& a = terms_.size() <= o.terms_.size() ? *this : o;
  const LaurentPolynomial& b = terms_.size() <= o.terms_.size() ? o : *this;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
  LaurentPolynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

LaurentPolynomial LaurentPolynomial::mul_term(const Monomial& m,
                                              const Rational& c) const {
  LaurentPolynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm + m, cc * c);
  return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  return vars_.same_as(o.vars_) && terms_ == o.terms_;
}

const std::pair<const Monomial, Rational>& LaurentPolynomial::leading_term()
    const {
  if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero");
  return *terms_.rbegin();
}

LaurentPolynomial LaurentPolynomial::exact_divide(
    const LaurentPolynomial& o) const {
  require_same_vars(o);
  if (o.is_zero()) fail(ErrorKind::NonDivisible, "division by zero");
  if (is_zero()) return zero(vars_);
  // Every monomial is invertible in the Laurent ring, so divisibility of
  // leading monomials never fails; the useful constraint is the Newton box.
  // Minkowski: Newton(q) + Newton(o) = Newton(this), so per coordinate every
  // quotient term lies in [min(this)-min(o), max(this)-max(o)].
  std::vector<int32_t> alo, ahi, blo, bhi;
  exponent_span(alo, ahi);
  o.exponent_span(blo, bhi);
  Monomial box_lo(vars_.size()), box_hi(vars_.size());
  for (int i = 0; i < vars_.size(); ++i) {
    box_lo.e[i] = alo[i] - blo[i];
    box_hi.e[i] = ahi[i] - bhi[i];
    if (box_lo.e[i] > box_hi.e[i])
      fail(ErrorKind::NonDivisible, "no Laurent quotient (Newton box empty)");
  }
  auto in_box = [&](const Monomial& m) {
    for (int i = 0; i < vars_.size(); ++i)
      if (m.e[i] < box_lo.e[i] || m.e[i] > box_hi.e[i]) return false;
    return true;
  };
  LaurentPolynomial q(vars_), r(*this);
  const auto& [lb, cb] = o.leading_term();
  while (!r.is_zero()) {
    const auto& [lr, cr] = r.leading_term();
    Monomial qt = lr - lb;
    if (!in_box(qt)) fail(ErrorKind::NonDivisible, "no Laurent quotient");
    Rational qc = cr / cb;
    q.add_term(qt, qc);
    r = r - o.mul_term(qt, qc);
  }
  return q;
}

LaurentPolynomial LaurentPolynomial::pow(int n) const {
  if (n < 0) fail(ErrorKind::Internal, "negative power");
  LaurentPolynomial r = constant(vars_, 1);
  LaurentPolynomial b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(-m, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::adams(int n) const {
  if (n < 1) fail(ErrorKind::Internal, "Adams operation needs n >= 1");
  LaurentPolynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.scaled(n), c);
  return r;
}

Rational LaurentPolynomial::rank() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

void LaurentPolynomial::exponent_span(std::vector<int32_t>& lo,
                                      std::vector<int32_t>& hi) const {
  lo.assign(vars_.size(), 0);
  hi.assign(vars_.size(), 0);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < vars_.size(); ++i) {
      if (first) {
        lo[i] = hi[i] = m.e[i];
      } else {
        lo[i] = std::min(lo[i], m.e[i]);
        hi[i] = std::max(hi[i], m.e[i]);
      }
    }
    first = false;
  }
}

LaurentPolynomial LaurentPolynomial::remap(
    const VariableSet& target, const std::vector<Monomial>& image,
    const std::vector<Rational>& half_branch) const {
  if (static_cast<int>(image.size()) != vars_.size())
    fail(ErrorKind::Internal, "remap image arity mismatch");
  LaurentPolynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(target.size());
    Rational cc = c;
    for (int i = 0; i < vars_.size(); ++i) {
      if (m.e[i] == 0) continue;
      // image[i] is the monomial that variable i maps to, in target vars,
      // with doubled exponents; the source exponent is m.e[i]/2.
      for (size_t j = 0; j < mm.e.size(); ++j) {
        int64_t add = int64_t(image[i].e[j]) * m.e[i];
        if (add % 2 != 0)
          fail(ErrorKind::Internal, "remap leaves the exponent lattice");
        mm.e[j] += static_cast<int32_t>(add / 2);
      }
      if (!half_branch.empty() && (m.e[i] % 2) != 0) cc *= half_branch[i];
    }
    r.add_term(mm, cc);
  }
  return r;
}

Rational LaurentPolynomial::evaluate(const EvalPoint& p) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c * p.eval_monomial(m);
  return s;
}

// ---------------------------------------------------------------------------
// Printing: canonical grammar. Terms in map order (lex on exponent vector);
// each term `coef * v^(p/2) * ...` with exponents as reduced fractions.

namespace {

std::string exp_to_string(int32_t e2) {
  std::ostringstream os;
  if (e2 % 2 == 0) {
    os << e2 / 2;
  } else {
    os << "(" << e2 << "/2)";
  }
  return os.str();
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < vars_.size(); ++i) {
      if (m.e[i] == 0) continue;
      os << " * " << vars_.name(i) << "^" << exp_to_string(m.e[i]);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser for the same grammar (also accepts exponents like 3/2 and -2, and
// bare variables / integers).

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

Integer parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  size_t digits = 0;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    ++c.i;
    ++digits;
  }
  if (digits == 0) fail(ErrorKind::Io, "expected integer in polynomial text");
  return Integer(c.s.substr(start, c.i - start));
}

Rational parse_rational(Cursor& c) {
  Integer num = parse_integer(c);
  if (c.eat('/')) {
    Integer den = parse_integer(c);
    if (den == 0) fail(ErrorKind::Io, "zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

std::string parse_name(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) ||
          c.s[c.i] == '_')) {
    ++c.i;
  }
  if (c.i == start) fail(ErrorKind::Io, "expected variable name");
  return c.s.substr(start, c.i - start);
}

// exponent: integer, or fraction p/q with q in {1,2}, optionally in parens
int32_t parse_exponent(Cursor& c) {
  bool paren = c.eat('(');
  Integer num = parse_integer(c);
  Integer den = 1;
  if (c.eat('/')) den = parse_integer(c);
  if (paren && !c.eat(')')) fail(ErrorKind::Io, "expected ')'");
  if (den == 1) num *= 2;
  else if (den != 2)
    fail(ErrorKind::Io, "exponent denominator must be 1 or 2");
  if (num < -1000000 || num > 1000000) fail(ErrorKind::Io, "exponent too big");
  return static_cast<int32_t>(num);
}

}  // namespace

LaurentPolynomial parse_polynomial(const VariableSet& vars,
                                   const std::string& text) {
  LaurentPolynomial out = LaurentPolynomial::zero(vars);
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('+')) {
    } else if (c.eat('-')) {
      sign = -1;
    } else if (!first) {
      fail(ErrorKind::Io, "expected '+' or '-' between terms");
    }
    first = false;
    // a term: [rational] (* var[^exp])*  or just vars
    Rational coef = 1;
    Monomial m(vars.size());
    bool have_any = false;
    char p = c.peek();
    if (std::isdigit(static_cast<unsigned char>(p)) || p == '-' || p == '+') {
      coef = parse_rational(c);
      have_any = true;
    }
    while (true) {
      // optional '*' then a variable
      size_t save = c.i;
      bool star = c.eat('*');
      char q = c.peek();
      if (!(std::isalpha(static_cast<unsigned char>(q)) || q == '_')) {
        if (star) c.i = save;
        break;
      }
      std::string nm = parse_name(c);
      int idx = vars.index_of(nm);
      if (idx < 0) fail(ErrorKind::Io, "unknown variable '" + nm + "'");
      int32_t e2 = 2;
      if (c.eat('^')) e2 = parse_exponent(c);
      m.e[idx] += e2;
      have_any = true;
    }
    if (!have_any) fail(ErrorKind::Io, "empty term in polynomial text");
    out.add_term(m, coef * sign);
  }
  return out;
}

}  // namespace kenum
