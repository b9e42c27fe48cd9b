#include "kenum/stable_envelope.hpp"

namespace kenum::stab {

const VariableSet& tp1_vars() {
  static const VariableSet v({"a1", "a2", "h"});
  return v;
}

namespace {

LaurentPolynomial var(const VariableSet& vars, const std::string& n,
                      int e2 = 2) {
  return LaurentPolynomial::variable(vars, n, e2);
}

LaurentPolynomial one(const VariableSet& vars) {
  return LaurentPolynomial::constant(vars, 1);
}

}  // namespace

KClassTP1 stab_class(Chamber ch, int point) {
  const VariableSet& v = tp1_vars();
  LaurentPolynomial h_half = var(v, "h", 1);
  if (ch == Chamber::Plus) {
    if (point == 1)  // (1 - a2 L) h^{1/2}
      return {h_half, -var(v, "a2") * h_half};
    return {one(v), -var(v, "h") * var(v, "a1")};  // 1 - h a1 L
  }
  if (point == 1)  // 1 - h a2 L
    return {one(v), -var(v, "h") * var(v, "a2")};
  return {h_half, -var(v, "a1") * h_half};  // (1 - a1 L) h^{1/2}
}

LaurentPolynomial restrict_class(const KClassTP1& c, int point) {
  const VariableSet& v = tp1_vars();
  // L|_{p_i} = a_i^{-1}
  LaurentPolynomial li = var(v, point == 1 ? "a1" : "a2", -2);
  return c.c0 + c.c1 * li;
}

Mat stab_matrix(Chamber ch) {
  Mat m(2, std::vector<FactoredRational>(2, FactoredRational::one(tp1_vars())));
  for (int col = 1; col <= 2; ++col) {
    KClassTP1 c = stab_class(ch, col);
    for (int row = 1; row <= 2; ++row)
      m[row - 1][col - 1] = FactoredRational::from_poly(restrict_class(c, row));
  }
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, long long budget) {
  size_t n = a.size(), k = b.size(), mcols = b[0].size();
  Mat r(n, std::vector<FactoredRational>(
               mcols, FactoredRational::zero(tp1_vars())));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < mcols; ++j) {
      FactoredRational acc = FactoredRational::zero(a[0][0].vars());
      for (size_t l = 0; l < k; ++l)
        acc = acc.add(a[i][l] * b[l][j], budget);
      r[i][j] = std::move(acc);
    }
  return r;
}

Mat mat_inverse2(const Mat& m) {
  FactoredRational det =
      (m[0][0] * m[1][1]).add(-(m[0][1] * m[1][0]), 1'000'000);
  if (det.is_zero()) fail(ErrorKind::Internal, "singular 2x2 matrix");
  Mat r(2, std::vector<FactoredRational>(2, FactoredRational::zero(
                                                m[0][0].vars())));
  r[0][0] = m[1][1] / det;
  r[0][1] = -(m[0][1] / det);
  r[1][0] = -(m[1][0] / det);
  r[1][1] = m[0][0] / det;
  return r;
}

bool mat_equal(const Mat& a, const Mat& b, const RunConfig& cfg, Rng& rng) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!fr_equal(a[i][j], b[i][j], cfg, rng)) return false;
  }
  return true;
}

Mat r_matrix() {
  return mat_mul(mat_inverse2(stab_matrix(Chamber::Minus)),
                 stab_matrix(Chamber::Plus));
}

Mat r_matrix_displayed() {
  const VariableSet& v = tp1_vars();
  // u = a1/a2; entries h^{1/2}(1-u)/(h-u), u(1-h)/(u-h), (1-h)/(u-h)
  LaurentPolynomial a1 = var(v, "a1"), a2 = var(v, "a2"), h = var(v, "h");
  LaurentPolynomial hh = var(v, "h", 1);
  FactoredRational diag = FactoredRational::from_poly(hh * (a2 - a1)) /
                          FactoredRational::from_poly(h * a2 - a1);
  FactoredRational top = FactoredRational::from_poly(a1 * (one(v) - h)) /
                         FactoredRational::from_poly(a1 - h * a2);
  FactoredRational bot = FactoredRational::from_poly(a2 * (one(v) - h)) /
                         FactoredRational::from_poly(a1 - h * a2);
  Mat m(2, std::vector<FactoredRational>(2, diag));
  m[0][1] = top;
  m[1][0] = bot;
  return m;
}

bool entries_check(const RunConfig& cfg, Rng& rng) {
  return mat_equal(r_matrix(), r_matrix_displayed(), cfg, rng);
}

// ---------------------------------------------------------------------------
// unitarity on the 2x2 block: R(u) P R(1/u) P = 1, P the basis swap;
// R(1/u) is the same matrix with a1 and a2 exchanged

namespace {

FactoredRational swap_a(const FactoredRational& f) {
  const VariableSet& v = tp1_vars();
  std::vector<Monomial> image(3, Monomial(3));
  image[0].e = {0, 2, 0};  // a1 -> a2
  image[1].e = {2, 0, 0};  // a2 -> a1
  image[2].e = {0, 0, 2};  // h -> h
  FactoredRational out = FactoredRational::from_monomial(
      v, Monomial{{f.prefactor_monomial().e[1], f.prefactor_monomial().e[0],
                   f.prefactor_monomial().e[2]}},
      f.coef());
  for (const auto& [p, m] : f.factors()) out.push_factor(p.remap(v, image), m);
  return out;
}

Mat swap_a(const Mat& m) {
  Mat r = m;
  for (auto& row : r)
    for (auto& e : row) e = swap_a(e);
  return r;
}

Mat permuted(const Mat& m) {  // P m P for the 2x2 block
  Mat r = m;
  std::swap(r[0][0], r[1][1]);
  std::swap(r[0][1], r[1][0]);
  return r;
}

Mat identity2() {
  Mat r(2, std::vector<FactoredRational>(2, FactoredRational::zero(
                                                tp1_vars())));
  r[0][0] = FactoredRational::one(tp1_vars());
  r[1][1] = FactoredRational::one(tp1_vars());
  return r;
}

}  // namespace

bool unitarity_check(const RunConfig& cfg, Rng& rng) {
  Mat r = r_matrix();
  Mat r21 = permuted(swap_a(r));  // P R(1/u) P
  return mat_equal(mat_mul(r, r21, cfg.clear_budget), identity2(), cfg, rng);
}

// ---------------------------------------------------------------------------
// Yang-Baxter on (C^2)^{x3} over {a1,a2,a3,h}

namespace {

const VariableSet& yb_vars() {
  static const VariableSet v({"a1", "a2", "a3", "h"});
  return v;
}

// 2x2 R-block for the spectral parameter u = a_i/a_j, embedded over yb_vars;
// swapped=false: entries as displayed; swapped=true: off-diagonals exchanged
Mat r_block(int i, int j, bool swapped) {
  const VariableSet& v = yb_vars();
  auto a = [&](int k) {
    return LaurentPolynomial::variable(v, "a" + std::to_string(k));
  };
  LaurentPolynomial h = LaurentPolynomial::variable(v, "h");
  LaurentPolynomial hh = LaurentPolynomial::variable(v, "h", 1);
  LaurentPolynomial one_ = LaurentPolynomial::constant(v, 1);
  FactoredRational diag = FactoredRational::from_poly(hh * (a(j) - a(i))) /
                          FactoredRational::from_poly(h * a(j) - a(i));
  FactoredRational top = FactoredRational::from_poly(a(i) * (one_ - h)) /
                         FactoredRational::from_poly(a(i) - h * a(j));
  FactoredRational bot = FactoredRational::from_poly(a(j) * (one_ - h)) /
                         FactoredRational::from_poly(a(i) - h * a(j));
  Mat m(2, std::vector<FactoredRational>(2, diag));
  if (!swapped) {
    m[0][1] = top;
    m[1][0] = bot;
  } else {
    m[0][1] = bot;
    m[1][0] = top;
  }
  return m;
}

// 8x8 operator acting on tensor factors (f1, f2) of C^2 x C^2 x C^2 with the
// 4x4 block diag(1, R, 1) in the basis e_ii, e_ij, e_ji, e_jj
using BigMat = std::vector<std::vector<FactoredRational>>;

BigMat embed(const Mat& r2, int f1, int f2) {
  const VariableSet& v = yb_vars();
  BigMat m(8, std::vector<FactoredRational>(8, FactoredRational::zero(v)));
  auto bit = [](int x, int f) { return (x >> (2 - f)) & 1; };
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col) {
      // all tensor factors other than f1,f2 must match
      bool match = true;
      for (int f = 0; f < 3; ++f)
        if (f != f1 && f != f2 && bit(row, f) != bit(col, f)) match = false;
      if (!match) continue;
      int r1 = bit(row, f1), r2b = bit(row, f2);
      int c1 = bit(col, f1), c2 = bit(col, f2);
      // 4x4 block: e_00 -> 1, span(e_01, e_10) -> r2, e_11 -> 1
      if (r1 == 0 && r2b == 0) {
        if (c1 == 0 && c2 == 0) m[row][col] = FactoredRational::one(v);
      } else if (r1 == 1 && r2b == 1) {
        if (c1 == 1 && c2 == 1) m[row][col] = FactoredRational::one(v);
      } else {
        if (c1 + c2 != 1) continue;
        int ri = (r1 == 0 && r2b == 1) ? 0 : 1;  // e_01 first
        int ci = (c1 == 0 && c2 == 1) ? 0 : 1;
        m[row][col] = r2[ri][ci];
      }
    }
  return m;
}

BigMat big_mul(const BigMat& a, const BigMat& b, long long budget) {
  size_t n = a.size();
  BigMat r(n, std::vector<FactoredRational>(n, FactoredRational::zero(
                                                   yb_vars())));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      FactoredRational acc = FactoredRational::zero(yb_vars());
      for (size_t l = 0; l < n; ++l) {
        if (a[i][l].is_zero() || b[l][j].is_zero()) continue;
        acc = acc.add(a[i][l] * b[l][j], budget);
      }
      r[i][j] = std::move(acc);
    }
  return r;
}

bool yb_holds(bool swapped, const RunConfig& cfg, Rng& rng) {
  BigMat r12 = embed(r_block(1, 2, swapped), 0, 1);
  BigMat r13 = embed(r_block(1, 3, swapped), 0, 2);
  BigMat r23 = embed(r_block(2, 3, swapped), 1, 2);
  BigMat lhs = big_mul(big_mul(r12, r13, cfg.clear_budget), r23,
                       cfg.clear_budget);
  BigMat rhs = big_mul(big_mul(r23, r13, cfg.clear_budget), r12,
                       cfg.clear_budget);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!fr_equal(lhs[i][j], rhs[i][j], cfg, rng)) return false;
  return true;
}

}  // namespace

bool yang_baxter_check(const RunConfig& cfg, Rng& rng) {
  if (yb_holds(false, cfg, rng)) return true;
  if (yb_holds(true, cfg, rng)) return true;
  fail(ErrorKind::BasisOrderMismatch,
       "Yang-Baxter fails for both middle-block orderings");
}

// ---------------------------------------------------------------------------
// degree axiom: intervals of a1-exponents, slope L = O(-eps)

namespace {

// [min,max] of the a1-exponent (doubled) of a Laurent polynomial
std::pair<Rational, Rational> a1_interval(const LaurentPolynomial& p) {
  if (p.is_zero()) fail(ErrorKind::Internal, "interval of zero");
  int32_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) lo = hi = m.e[0];
    lo = std::min(lo, m.e[0]);
    hi = std::max(hi, m.e[0]);
    first = false;
  }
  return {Rational(lo, 2), Rational(hi, 2)};
}

}  // namespace

bool degree_axiom_check(const Rational& eps) {
  if (eps < 0 || eps > 1)
    fail(ErrorKind::OutOfDomain, "slope parameter must be in [0,1]");
  // weight exponent of L = O(-eps) at p_i in the a1-direction:
  // O(1)|_{p_i} = a_i^{-1}, so O(-eps)|_{p1} = a1^{eps}: shift eps at p1,
  // 0 at p2
  auto shift = [&](int point) { return point == 1 ? eps : Rational(0); };
  for (Chamber ch : {Chamber::Plus, Chamber::Minus}) {
    for (int f1 = 1; f1 <= 2; ++f1)
      for (int f2 = 1; f2 <= 2; ++f2) {
        if (f1 == f2) continue;
        LaurentPolynomial off = restrict_class(stab_class(ch, f1), f2);
        if (off.is_zero()) continue;  // support axiom territory
        LaurentPolynomial diag = restrict_class(stab_class(ch, f2), f2);
        auto [olo, ohi] = a1_interval(off);
        auto [dlo, dhi] = a1_interval(diag);
        // strict inclusion of the shifted intervals
        if (!(olo + shift(f1) > dlo + shift(f2) &&
              ohi + shift(f1) < dhi + shift(f2)))
          return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// diagonal decomposition

bool diagonal_decomposition_check(bool strip_normalization,
                                  const RunConfig& cfg, Rng& rng) {
  const VariableSet& v = tp1_vars();
  Mat sp = stab_matrix(Chamber::Plus);
  Mat sm = stab_matrix(Chamber::Minus);
  // tangent weights at the fixed points: T_{p1} = a2/a1 + h^{-1} a1/a2,
  // T_{p2} = a1/a2 + h^{-1} a2/a1; pairing 1/Lambda^.(T^vee)
  auto evec = [&](int x) {
    LaurentPolynomial one_ = LaurentPolynomial::constant(v, 1);
    Monomial tan(3), cot(3);
    if (x == 1) {
      tan.e = {-2, 2, 0};           // a2/a1
      cot.e = {2, -2, -2};          // h^{-1} a1/a2
    } else {
      tan.e = {2, -2, 0};
      cot.e = {-2, 2, -2};
    }
    FactoredRational e = FactoredRational::one(v);
    e.push_factor(one_ - LaurentPolynomial::term(v, -tan, 1), 1);
    e.push_factor(one_ - LaurentPolynomial::term(v, -cot, 1), 1);
    return e;
  };
  // polarization-flip normalization: column j of the opposite-polarization
  // transposed envelope is the Stab_- column twisted by O(-1) times
  // -h^{-1/2}/a_{jbar} (restriction at p_x multiplies by a_x)
  auto twist = [&](int col, int x) {
    Monomial m(3);
    m.e[x == 1 ? 0 : 1] += 2;                 // a_x
    m.e[col == 1 ? 1 : 0] -= 2;               // 1/a_{jbar}
    if (!strip_normalization) m.e[2] -= 1;    // h^{-1/2}
    return FactoredRational::from_monomial(v, m, -1);
  };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      FactoredRational acc = FactoredRational::zero(v);
      for (int x = 1; x <= 2; ++x) {
        FactoredRational term = twist(i, x) * sm[x - 1][i - 1] *
                                sp[x - 1][j - 1] / evec(x);
        acc = acc.add(term, cfg.clear_budget);
      }
      FactoredRational expect = (i == j) ? FactoredRational::one(v)
                                         : FactoredRational::zero(v);
      if (!fr_equal(acc, expect, cfg, rng)) return false;
    }
  return true;
}

}  // namespace kenum::stab
