#include "kenum/identities.hpp"

#include "kenum/pleth.hpp"

namespace kenum::ids {

namespace {

const VariableSet& tm_vars() {
  static const VariableSet v({"t", "m"});
  return v;
}

const VariableSet& t5_vars() {
  static const VariableSet v({"t1", "t2", "t3", "t4", "t5"});
  return v;
}

LaurentPolynomial one(const VariableSet& v) {
  return LaurentPolynomial::constant(v, 1);
}

}  // namespace

FactoredSeries qbinomial_sum_form(int order) {
  const VariableSet& v = tm_vars();
  FactoredSeries f("z", order, FactoredRational::zero(v));
  FactoredRational coeff = FactoredRational::one(v);
  f.set(0, coeff);
  for (int n = 1; n <= order; ++n) {
    LaurentPolynomial tn = LaurentPolynomial::variable(v, "t", 2 * n);
    LaurentPolynomial mt = LaurentPolynomial::variable(v, "m") * tn;
    coeff = coeff * FactoredRational::from_poly(one(v) - mt) /
            FactoredRational::from_poly(one(v) - tn);
    f.set(n, coeff);
  }
  return f;
}

FactoredSeries qbinomial_pleth_form(int order) {
  const VariableSet& v = tm_vars();
  LaurentPolynomial t = LaurentPolynomial::variable(v, "t");
  LaurentPolynomial m = LaurentPolynomial::variable(v, "m");
  FactoredRational g1 = FactoredRational::from_poly(one(v) - m * t) /
                        FactoredRational::from_poly(one(v) - t);
  FactoredSeries g("z", order, FactoredRational::zero(v));
  g.set(1, g1);
  return pleth::pleth_exp_series(g);
}

LaurentSeries qbinomial_product_form(int order, int product_depth) {
  const VariableSet& v = tm_vars();
  LaurentSeries acc = LaurentSeries::one("z", order, one(v));
  for (int k = 0; k <= product_depth; ++k) {
    LaurentSeries num("z", order, LaurentPolynomial::zero(v));
    num.set(0, one(v));
    num.set(1, -(LaurentPolynomial::variable(v, "m") *
                 LaurentPolynomial::variable(v, "t", 2 * (k + 1))));
    LaurentSeries den("z", order, LaurentPolynomial::zero(v));
    den.set(0, one(v));
    den.set(1, -LaurentPolynomial::variable(v, "t", 2 * k));
    acc = acc * num * den.reciprocal();
  }
  return acc;
}

namespace {

// keep only terms with t-exponent <= bound (doubled compare)
LaurentPolynomial truncate_t(const LaurentPolynomial& p, int bound) {
  LaurentPolynomial out(p.vars());
  for (const auto& [m, c] : p.terms())
    if (m.e[0] <= 2 * bound) out.add_term(m, c);
  return out;
}

// exact boundary-corrected difference-equation certificate for the finite
// product P_K: (1-zmt) P_K(tz) (1-z t^{K+1}) == (1-z) P_K(z) (1-zm t^{K+2})
bool product_certificate(int order, int depth) {
  const VariableSet& v = tm_vars();
  LaurentSeries p = qbinomial_product_form(order, depth);
  LaurentPolynomial t = LaurentPolynomial::variable(v, "t");
  LaurentSeries ptz = p.compose_with_monomial(t, 1);

  auto linear = [&](const LaurentPolynomial& c1) {
    LaurentSeries s("z", order, LaurentPolynomial::zero(v));
    s.set(0, one(v));
    s.set(1, c1);
    return s;
  };
  LaurentPolynomial mt = LaurentPolynomial::variable(v, "m") * t;
  LaurentSeries lhs =
      linear(-mt) * ptz *
      linear(-LaurentPolynomial::variable(v, "t", 2 * (depth + 1)));
  LaurentSeries rhs =
      linear(-one(v)) * p *
      linear(-(LaurentPolynomial::variable(v, "m") *
               LaurentPolynomial::variable(v, "t", 2 * (depth + 2))));
  for (int n = 0; n <= order; ++n)
    if (!(lhs[n] == rhs[n])) return false;
  return true;
}

}  // namespace

IdentityReport qbinomial_check(int order, const RunConfig& cfg, Rng& rng) {
  if (order > 12)
    fail(ErrorKind::BoundExceeded, "q-binomial order is guarded at 12");
  IdentityReport rep;
  rep.name = "qbinomial";
  rep.order = order;
  FactoredSeries sum = qbinomial_sum_form(order);
  FactoredSeries pl = qbinomial_pleth_form(order);
  for (int n = 0; n <= order; ++n) {
    if (!fr_equal(sum[n], pl[n], cfg, rng)) {
      rep.first_mismatch = "sum vs pleth at z^" + std::to_string(n);
      return rep;
    }
  }
  // product form: t-adic agreement with the sum form through t^depth, plus
  // the exact certificate that the truncated product satisfies the same
  // first-order difference equation up to the boundary factors
  int depth = 2 * order + 4;
  LaurentSeries prod = qbinomial_product_form(order, depth);
  for (int n = 0; n <= order; ++n) {
    std::map<std::string, ConeDir> dirs{{"t", ConeDir::AtZero},
                                        {"m", ConeDir::AtZero}};
    LaurentPolynomial sum_exp = expand_in_cone(sum[n], dirs, depth + order);
    if (!(truncate_t(sum_exp, depth) == truncate_t(prod[n], depth))) {
      rep.first_mismatch = "sum vs product (t-adic) at z^" + std::to_string(n);
      return rep;
    }
  }
  if (!product_certificate(order, depth)) {
    rep.first_mismatch = "product difference-equation certificate";
    return rep;
  }
  rep.verdict = true;
  return rep;
}

IdentityReport qbinomial_difference_equation(int order, const RunConfig& cfg,
                                             Rng& rng) {
  if (order > 12)
    fail(ErrorKind::BoundExceeded, "q-binomial order is guarded at 12");
  IdentityReport rep;
  rep.name = "qbinomial-diff";
  rep.order = order;
  const VariableSet& v = tm_vars();
  FactoredSeries f = qbinomial_sum_form(order);
  // (1-z) f(z): [n] = f_n - f_{n-1}; (1-zmt) f(tz): [n] = t^n f_n - m t^n f_{n-1}
  for (int n = 0; n <= order; ++n) {
    FactoredRational lhs = f[n];
    if (n >= 1) lhs = lhs.add(-f[n - 1], cfg.clear_budget);
    Monomial tn(2);
    tn.e[0] = 2 * n;
    FactoredRational rhs = f[n].adams(1) *
                           FactoredRational::from_monomial(v, tn);
    if (n >= 1) {
      Monomial mtn(2);
      mtn.e[0] = 2 * n;
      mtn.e[1] = 2;
      rhs = rhs.add(-(f[n - 1] * FactoredRational::from_monomial(v, mtn)),
                    cfg.clear_budget);
    }
    // f(tz) coefficient: substitute t-> t in coeff and multiply by t^n; the
    // coefficients already live in t so f_n(t) t^n is the composed value
    if (!fr_equal(lhs, rhs, cfg, rng)) {
      rep.first_mismatch = "difference equation at z^" + std::to_string(n);
      return rep;
    }
  }
  if (!product_certificate(order, 2 * order + 4)) {
    rep.first_mismatch = "product-form certificate";
    return rep;
  }
  rep.verdict = true;
  return rep;
}

// ---------------------------------------------------------------------------
// spinors and the supergravity field content

std::pair<LaurentPolynomial, LaurentPolynomial> spinor_characters() {
  const VariableSet& v = t5_vars();
  LaurentPolynomial sp(v), sm(v);
  for (int mask = 0; mask < 32; ++mask) {
    Monomial m(5);
    int minus = 0;
    for (int i = 0; i < 5; ++i) {
      if (mask & (1 << i)) {
        m.e[i] = -1;
        ++minus;
      } else {
        m.e[i] = 1;
      }
    }
    if (minus % 2 == 0) sp.add_term(m, 1);
    else sm.add_term(m, 1);
  }
  return {sp, sm};
}

LaurentPolynomial sym2(const LaurentPolynomial& v) {
  return (v * v + v.adams(2)) * Rational(1, 2);
}
LaurentPolynomial lam2(const LaurentPolynomial& v) {
  return (v * v - v.adams(2)) * Rational(1, 2);
}
LaurentPolynomial lam3(const LaurentPolynomial& v) {
  return (v * v * v - v * v.adams(2) * Rational(3) + v.adams(3) * Rational(2)) *
         Rational(1, 6);
}

IdentityReport mtheory_identity_check(int branch) {
  IdentityReport rep;
  rep.name = "mtheory";
  const VariableSet& v5 = t5_vars();
  auto [sp, sm] = spinor_characters();
  LaurentPolynomial vv(v5);
  for (int i = 0; i < 5; ++i) {
    LaurentPolynomial ti =
        LaurentPolynomial::variable(v5, v5.name(i));
    vv = vv + ti + ti.bar();
  }
  // M_pm = (S^2 V - 1) - V + Lam^3 V + (-Lam^2 V + V - 1) - RS + S,
  // RS = V (x) S - S'. The polarization pairs M_+ with the odd spinor
  // (16 weights with an odd number of minus signs); the even/odd labels of
  // spinor_characters() are fixed by the character-difference identity.
  auto build_m = [&](const LaurentPolynomial& s_same,
                     const LaurentPolynomial& s_other) {
    LaurentPolynomial one5 = LaurentPolynomial::constant(v5, 1);
    return sym2(vv) - one5 - vv + lam3(vv) - lam2(vv) + vv - one5 -
           (vv * s_same - s_other) + s_same;
  };
  LaurentPolynomial mplus = build_m(sm, sp);
  LaurentPolynomial mminus = build_m(sp, sm);

  // W = t1+..+t5, Lambda^. W = prod (1 - t_i)
  LaurentPolynomial w(v5), lamw = LaurentPolynomial::constant(v5, 1);
  for (int i = 0; i < 5; ++i) {
    LaurentPolynomial ti = LaurentPolynomial::variable(v5, v5.name(i));
    w = w + ti;
    lamw = lamw * (LaurentPolynomial::constant(v5, 1) - ti);
  }
  LaurentPolynomial rhs_plus = -(w * lamw);
  LaurentPolynomial rhs_minus = w.bar() * lamw;

  // impose t1..t5 = 1: t5 -> (t1 t2 t3 t4)^{-1}, branch fixes the sign of
  // (t1..t5)^{1/2}
  VariableSet v4({"t1", "t2", "t3", "t4"});
  std::vector<Monomial> image;
  for (int i = 0; i < 4; ++i) {
    Monomial m(4);
    m.e[i] = 2;
    image.push_back(m);
  }
  Monomial t5img(4);
  t5img.e = {-2, -2, -2, -2};
  image.push_back(t5img);
  std::vector<Rational> half_branch(5, 1);
  half_branch[4] = branch;
  auto sub = [&](const LaurentPolynomial& p) {
    return p.remap(v4, image, half_branch);
  };

  bool okp = sub(mplus) == sub(rhs_plus);
  bool okm = sub(mminus) == sub(rhs_minus);
  rep.verdict = okp && okm;
  if (!okp) rep.first_mismatch = "M_+";
  else if (!okm) rep.first_mismatch = "M_-";
  return rep;
}

}  // namespace kenum::ids
