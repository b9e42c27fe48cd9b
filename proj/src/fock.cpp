#include "kenum/fock.hpp"

#include "kenum/pleth.hpp"

#include <functional>

namespace kenum::fock {

namespace {

// graded degree of a monomial under the per-variable grading, doubled
// exponents in, honest degree out (grades are integers, exponents are /2;
// only even stored exponents appear for graded variables here)
int graded_degree(const Monomial& m, const std::vector<int>& grading) {
  long d = 0;
  for (size_t i = 0; i < m.e.size(); ++i) d += long(grading[i]) * m.e[i];
  if (d % 2 != 0) fail(ErrorKind::Internal, "odd graded degree");
  return static_cast<int>(d / 2);
}

LaurentPolynomial truncate_by_grading(const LaurentPolynomial& p,
                                      const std::vector<int>& grading,
                                      int cutoff, bool* dropped) {
  LaurentPolynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (graded_degree(m, grading) <= cutoff) out.add_term(m, c);
    else if (dropped) *dropped = true;
  }
  return out;
}

}  // namespace

FockVector FockVector::vacuum(const VariableSet& vars, int cutoff,
                              std::vector<int> grading) {
  FockVector v;
  v.vars = vars;
  v.cutoff = cutoff;
  v.grading = std::move(grading);
  v.amps.emplace(parts::Partition{},
                 LaurentPolynomial::constant(vars, 1));
  return v;
}

void FockVector::add(const parts::Partition& p, const LaurentPolynomial& a) {
  if (a.is_zero()) return;
  if (p.size() > cutoff) {
    dropped = true;
    return;
  }
  auto [it, fresh] = amps.emplace(p, a);
  if (!fresh) {
    LaurentPolynomial s = it->second + a;
    if (s.is_zero()) amps.erase(it);
    else it->second = std::move(s);
  }
}

LaurentPolynomial FockVector::vacuum_amplitude() const {
  return amplitude(parts::Partition{});
}

LaurentPolynomial FockVector::amplitude(const parts::Partition& p) const {
  auto it = amps.find(p);
  return it == amps.end() ? LaurentPolynomial::zero(vars) : it->second;
}

namespace {

// all mu with mu interlacing over lam (mu >= lam) and |mu| <= maxsize
void for_each_over(const parts::Partition& lam, int maxsize,
                   const std::function<void(const parts::Partition&)>& fn) {
  std::vector<int> mu;
  int lam_len = lam.length();
  std::function<void(int, int)> rec = [&](int i, int used) {
    // mu_i ranges in [lam_i, min(mu_{i-1}, budget bound)], with
    // mu_1 unbounded above except by the size cap
    if (i > lam_len) {  // all constrained entries chosen; mu may stop here
      parts::Partition p;
      std::vector<int> parts;
      for (int x : mu)
        if (x > 0) parts.push_back(x);
      fn(parts::Partition(std::move(parts)));
      return;
    }
    int lo = lam.part(i);  // mu_{i+1} >= lam_{i+1} (0-based part())
    int hi;
    if (i == 0) {
      hi = lam.part(0) + (maxsize - used - lam.size());
      if (hi < lo) return;
    } else {
      hi = std::min(mu[i - 1], lam.part(i - 1));
    }
    // remaining minimal size if we take lo everywhere later is lam's tail;
    // cap by total size
    for (int v = lo; v <= hi; ++v) {
      if (used + v > maxsize) break;
      mu.push_back(v);
      rec(i + 1, used + v);
      mu.pop_back();
    }
  };
  rec(0, 0);
}

// all nu with mu interlacing over nu (nu <= mu)
void for_each_under(const parts::Partition& mu,
                    const std::function<void(const parts::Partition&)>& fn) {
  std::vector<int> nu;
  int len = mu.length();
  std::function<void(int)> rec = [&](int i) {
    if (i >= len) {
      std::vector<int> parts;
      for (int x : nu)
        if (x > 0) parts.push_back(x);
      fn(parts::Partition(std::move(parts)));
      return;
    }
    int lo = mu.part(i + 1);
    int hi = mu.part(i);
    for (int v = lo; v <= hi; ++v) {
      nu.push_back(v);
      rec(i + 1);
      nu.pop_back();
    }
  };
  rec(0);
}

}  // namespace

FockVector gamma_minus(const FockVector& v, const Monomial& marker) {
  FockVector out;
  out.vars = v.vars;
  out.cutoff = v.cutoff;
  out.grading = v.grading;
  out.dropped = v.dropped;
  for (const auto& [lam, amp] : v.amps) {
    for_each_over(lam, v.cutoff, [&](const parts::Partition& mu) {
      int k = mu.size() - lam.size();
      LaurentPolynomial a = amp.mul_term(marker.scaled(k), 1);
      a = truncate_by_grading(a, out.grading, out.cutoff, &out.dropped);
      out.add(mu, a);
    });
  }
  return out;
}

FockVector gamma_plus(const FockVector& v, const Monomial& marker) {
  FockVector out;
  out.vars = v.vars;
  out.cutoff = v.cutoff;
  out.grading = v.grading;
  out.dropped = v.dropped;
  for (const auto& [mu, amp] : v.amps) {
    for_each_under(mu, [&](const parts::Partition& nu) {
      int k = mu.size() - nu.size();
      LaurentPolynomial a = amp.mul_term(marker.scaled(k), 1);
      a = truncate_by_grading(a, out.grading, out.cutoff, &out.dropped);
      out.add(nu, a);
    });
  }
  return out;
}

FockVector energy_conjugate(const FockVector& v, const Monomial& weight) {
  FockVector out;
  out.vars = v.vars;
  out.cutoff = v.cutoff;
  out.grading = v.grading;
  out.dropped = v.dropped;
  for (const auto& [lam, amp] : v.amps) {
    LaurentPolynomial a = amp.mul_term(weight.scaled(lam.size()), 1);
    a = truncate_by_grading(a, out.grading, out.cutoff, &out.dropped);
    out.add(lam, a);
  }
  return out;
}

LaurentPolynomial pair(const FockVector& a, const FockVector& b) {
  LaurentPolynomial s(a.vars);
  for (const auto& [lam, amp] : a.amps) {
    auto it = b.amps.find(lam);
    if (it != b.amps.end()) s = s + amp * it->second;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Diagonal specs

DiagonalSpec DiagonalSpec::generic(int window) {
  std::vector<std::string> names;
  for (int a = -window; a <= window; ++a) {
    std::string n = a < 0 ? "qm" + std::to_string(-a) : "q" + std::to_string(a);
    names.push_back(n);
  }
  DiagonalSpec s;
  s.vars = VariableSet(names);
  s.window = window;
  s.grading.assign(names.size(), 1);
  for (int a = -window; a <= window; ++a) {
    Monomial m(s.vars.size());
    m.e[a + window] = 2;
    s.assignment[a] = m;
  }
  return s;
}

DiagonalSpec DiagonalSpec::macmahon(int window) {
  DiagonalSpec s;
  s.vars = VariableSet({"q"});
  s.window = window;
  s.grading = {1};
  for (int a = -window; a <= window; ++a) {
    Monomial m(1);
    m.e[0] = 2;
    s.assignment[a] = m;
  }
  return s;
}

DiagonalSpec DiagonalSpec::refined(int window) {
  DiagonalSpec s;
  s.vars = VariableSet({"z", "kappa"});
  s.window = window;
  s.grading = {1, 0};
  for (int a = -window; a <= window; ++a) {
    Monomial m(2);
    m.e[0] = 2;             // z
    m.e[1] = a >= 0 ? 1 : -1;  // kappa^{+-1/2}
    s.assignment[a] = m;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Transfer product and its comparisons

static TruncatedSeries<LaurentPolynomial> grade_split(
    const LaurentPolynomial& p, const std::vector<int>& grading, int cutoff) {
  TruncatedSeries<LaurentPolynomial> out(
      "deg", cutoff, LaurentPolynomial::zero(p.vars()));
  for (const auto& [m, c] : p.terms()) {
    int d = graded_degree(m, grading);
    if (d < 0 || d > cutoff) continue;
    LaurentPolynomial t = out[d];
    t.add_term(m, c);
    out.set(d, std::move(t));
  }
  return out;
}

TruncatedSeries<LaurentPolynomial> or_formula_lhs(const DiagonalSpec& spec,
                                                  int cutoff) {
  if (spec.window < cutoff - 1)
    fail(ErrorKind::BoundExceeded,
         "window too small for the requested cutoff");
  for (int a = -spec.window; a <= spec.window; ++a)
    if (!spec.assignment.count(a))
      fail(ErrorKind::MissingDiagonalVariable,
           "no assignment for diagonal " + std::to_string(a));
  const int M = spec.window;
  Monomial unit(spec.vars.size());
  FockVector v = FockVector::vacuum(spec.vars, cutoff, spec.grading);
  // ... Gamma+ q_{-1} Gamma+ q_0 Gamma- q_1 Gamma- ... applied to the vacuum
  // from the right: ascend through diagonals M..0, then descend -1..-M
  for (int a = M; a >= 0; --a) {
    v = gamma_minus(v, unit);
    v = energy_conjugate(v, spec.assignment.at(a));
  }
  for (int a = -1; a >= -M; --a) {
    v = gamma_plus(v, unit);
    v = energy_conjugate(v, spec.assignment.at(a));
  }
  v = gamma_plus(v, unit);
  return grade_split(v.vacuum_amplitude(), spec.grading, cutoff);
}

TruncatedSeries<LaurentPolynomial> brute_force_sum(const DiagonalSpec& spec,
                                                   int cutoff) {
  LaurentPolynomial total = LaurentPolynomial::zero(spec.vars);
  for (int n = 0; n <= cutoff; ++n)
    for (const auto& pp : parts::enumerate_plane_partitions(n))
      total.add_term(parts::diagonal_weight(pp, spec.assignment), 1);
  return grade_split(total, spec.grading, cutoff);
}

TruncatedSeries<LaurentPolynomial> or_formula_rhs(const DiagonalSpec& spec,
                                                  int cutoff) {
  if (spec.window < cutoff - 1)
    fail(ErrorKind::BoundExceeded,
         "window too small for the requested cutoff");
  // window-truncated double sum q_a q_{a+1} ... q_b over a <= 0 <= b
  LaurentPolynomial w = LaurentPolynomial::zero(spec.vars);
  for (int a = -spec.window; a <= 0; ++a)
    for (int b = 0; b <= spec.window; ++b) {
      Monomial m(spec.vars.size());
      for (int c = a; c <= b; ++c) m = m + spec.assignment.at(c);
      w.add_term(m, 1);
    }
  LaurentSeries g = grade_split(w, spec.grading, cutoff);
  return pleth::pleth_exp_series(g);
}

TruncatedSeries<LaurentPolynomial> refined_closed_series(int cutoff) {
  VariableSet vars({"z", "kappa"});
  // k^{1/2} z / ((1 - k^{1/2} z)(1 - k^{-1/2} z)) expanded in z
  auto khalf = [&](int sgn) {
    Monomial m(2);
    m.e[1] = sgn;
    return m;
  };
  LaurentSeries a("deg", cutoff, LaurentPolynomial::zero(vars));
  a.set(0, LaurentPolynomial::constant(vars, 1));
  if (cutoff >= 1) {
    Monomial m(2);
    m.e[0] = 2;
    m.e[1] = 1;
    a.set(1, -LaurentPolynomial::term(vars, m, 1));  // 1 - k^{1/2} z
  }
  LaurentSeries b = a;
  if (cutoff >= 1) {
    Monomial m(2);
    m.e[0] = 2;
    m.e[1] = -1;
    b.set(1, -LaurentPolynomial::term(vars, m, 1));  // 1 - k^{-1/2} z
  }
  LaurentSeries frac = a.reciprocal() * b.reciprocal();
  // multiply by k^{1/2} z: shifts degree by one
  LaurentSeries g("deg", cutoff, LaurentPolynomial::zero(vars));
  for (int k = 1; k <= cutoff; ++k) {
    Monomial shift(2);
    shift.e[0] = 2;
    shift.e[1] = 1;
    g.set(k, frac[k - 1].mul_term(shift, 1));
  }
  return pleth::pleth_exp_series(g);
}

bool refined_vertex_check(int cutoff) {
  if (cutoff > 8)
    fail(ErrorKind::BoundExceeded, "refined vertex cutoff guarded at 8");
  DiagonalSpec spec = DiagonalSpec::refined(std::max(0, cutoff - 1));
  auto lhs = or_formula_lhs(spec, cutoff);
  auto closed = refined_closed_series(cutoff);
  for (int k = 0; k <= cutoff; ++k)
    if (!(lhs[k] == closed[k])) return false;
  return true;
}

}  // namespace kenum::fock
