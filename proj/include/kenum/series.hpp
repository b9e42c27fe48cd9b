#pragma once

// Power series in one distinguished counting variable, hard-truncated at a
// fixed order, with coefficients in one of the exact rings (Laurent
// polynomials, factored rationals, or sums of those).

#include "kenum/core.hpp"
#include "kenum/factored.hpp"

#include <string>
#include <vector>

namespace kenum {

// --- coefficient-ring shims -------------------------------------------------

inline LaurentPolynomial coeff_add(const LaurentPolynomial& a,
                                   const LaurentPolynomial& b, long long) {
  return a + b;
}
inline FactoredRational coeff_add(const FactoredRational& a,
                                  const FactoredRational& b,
                                  long long budget) {
  return a.add(b, budget);
}
inline RationalSum coeff_add(const RationalSum& a, const RationalSum& b,
                             long long) {
  return a + b;
}

inline LaurentPolynomial coeff_mul(const LaurentPolynomial& a,
                                   const LaurentPolynomial& b) {
  return a * b;
}
inline FactoredRational coeff_mul(const FactoredRational& a,
                                  const FactoredRational& b) {
  return a * b;
}
inline RationalSum coeff_mul(const RationalSum& a, const RationalSum& b) {
  return a * b;
}

inline LaurentPolynomial coeff_scale(const LaurentPolynomial& a,
                                     const Rational& c) {
  return a * c;
}
inline FactoredRational coeff_scale(const FactoredRational& a,
                                    const Rational& c) {
  return a * c;
}
inline RationalSum coeff_scale(const RationalSum& a, const Rational& c) {
  return a * c;
}

inline bool coeff_is_zero(const LaurentPolynomial& a) { return a.is_zero(); }
inline bool coeff_is_zero(const FactoredRational& a) { return a.is_zero(); }
inline bool coeff_is_zero(const RationalSum& a) {
  return a.is_syntactic_zero();
}

inline LaurentPolynomial coeff_zero_like(const LaurentPolynomial& a) {
  return LaurentPolynomial::zero(a.vars());
}
inline FactoredRational coeff_zero_like(const FactoredRational& a) {
  return FactoredRational::zero(a.vars());
}
inline RationalSum coeff_zero_like(const RationalSum& a) {
  return RationalSum::zero(a.vars());
}

inline LaurentPolynomial coeff_one_like(const LaurentPolynomial& a) {
  return LaurentPolynomial::constant(a.vars(), 1);
}
inline FactoredRational coeff_one_like(const FactoredRational& a) {
  return FactoredRational::one(a.vars());
}
inline RationalSum coeff_one_like(const RationalSum& a) {
  return RationalSum::one(a.vars());
}

inline bool coeff_is_one(const LaurentPolynomial& a) { return a.is_one(); }
inline bool coeff_is_one(const FactoredRational& a) {
  return !a.is_zero() && a.coef() == 1 && a.prefactor_monomial().is_trivial() &&
         a.factors().empty();
}
inline bool coeff_is_one(const RationalSum& a) {
  return a.size() == 1 && coeff_is_one(a.parts()[0]);
}

inline LaurentPolynomial coeff_adams(const LaurentPolynomial& a, int n) {
  return a.adams(n);
}
inline FactoredRational coeff_adams(const FactoredRational& a, int n) {
  return a.adams(n);
}
inline RationalSum coeff_adams(const RationalSum& a, int n) {
  return a.adams(n);
}

inline LaurentPolynomial coeff_inverse(const LaurentPolynomial& a) {
  if (a.term_count() != 1)
    fail(ErrorKind::NonInvertibleConstantTerm,
         "constant term is not an invertible Laurent monomial");
  auto [m, c] = a.single_term();
  return LaurentPolynomial::term(a.vars(), -m, Rational(1) / c);
}
inline FactoredRational coeff_inverse(const FactoredRational& a) {
  if (a.is_zero())
    fail(ErrorKind::NonInvertibleConstantTerm, "zero constant term");
  return a.inverse();
}

// --- the series -------------------------------------------------------------

template <class C>
class TruncatedSeries {
public:
  TruncatedSeries(std::string var, int order, C zero_coeff,
                  long long budget = 1'000'000)
      : var_(std::move(var)),
        order_(order),
        budget_(budget),
        c_(static_cast<size_t>(order) + 1, zero_coeff) {
    if (order < 0) fail(ErrorKind::BoundExceeded, "negative series order");
  }

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  long long budget() const { return budget_; }
  const C& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  C& at(int k) { return c_.at(static_cast<size_t>(k)); }
  void set(int k, C v) {
    if (k <= order_) c_[static_cast<size_t>(k)] = std::move(v);
  }

  static TruncatedSeries one(const std::string& var, int order,
                             const C& proto, long long budget = 1'000'000) {
    TruncatedSeries s(var, order, coeff_zero_like(proto), budget);
    s.set(0, coeff_one_like(proto));
    return s;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries r(*this);
    for (int k = 0; k <= order_; ++k)
      r.c_[k] = coeff_add(r.c_[k], o.c_[k], budget_);
    return r;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const {
    return *this + o.scaled(Rational(-1));
  }

  TruncatedSeries scaled(const Rational& x) const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v = coeff_scale(v, x);
    return r;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries r(var_, order_, coeff_zero_like(c_[0]), budget_);
    for (int i = 0; i <= order_; ++i) {
      if (coeff_is_zero(c_[i])) continue;
      for (int j = 0; i + j <= order_; ++j) {
        if (coeff_is_zero(o.c_[j])) continue;
        r.c_[i + j] =
            coeff_add(r.c_[i + j], coeff_mul(c_[i], o.c_[j]), budget_);
      }
    }
    return r;
  }

  // multiply by coefficient-ring element
  TruncatedSeries times(const C& x) const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v = coeff_mul(v, x);
    return r;
  }

  TruncatedSeries reciprocal() const {
    C inv0 = coeff_inverse(c_[0]);
    TruncatedSeries r(var_, order_, coeff_zero_like(c_[0]), budget_);
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
      C s = coeff_zero_like(c_[0]);
      for (int k = 1; k <= n; ++k) {
        if (coeff_is_zero(c_[k])) continue;
        s = coeff_add(s, coeff_mul(c_[k], r.c_[n - k]), budget_);
      }
      r.c_[n] = coeff_scale(coeff_mul(inv0, s), Rational(-1));
    }
    return r;
  }

  // z -> scale * z^power (power >= 1)
  TruncatedSeries compose_with_monomial(const C& scale, int power) const {
    if (power < 1) fail(ErrorKind::BoundExceeded, "power must be >= 1");
    TruncatedSeries r(var_, order_, coeff_zero_like(c_[0]), budget_);
    C sp = coeff_one_like(c_[0]);
    for (int k = 0; k * power <= order_; ++k) {
      if (!coeff_is_zero(c_[k]))
        r.c_[k * power] = coeff_mul(c_[k], sp);
      sp = coeff_mul(sp, scale);
    }
    return r;
  }

  // Adams on both the coefficients and the counting variable
  TruncatedSeries adams_all(int n) const {
    TruncatedSeries r(var_, order_, coeff_zero_like(c_[0]), budget_);
    for (int k = 0; k * n <= order_; ++k)
      r.c_[k * n] = coeff_adams(c_[k], n);
    return r;
  }

  // exp of a series with vanishing constant term
  TruncatedSeries exp() const {
    if (!coeff_is_zero(c_[0]))
      fail(ErrorKind::Internal, "series exp needs zero constant term");
    TruncatedSeries r = one(var_, order_, c_[0], budget_);
    TruncatedSeries p = one(var_, order_, c_[0], budget_);
    Rational fact = 1;
    for (int j = 1; j <= order_; ++j) {
      p = p * *this;
      fact *= j;
      r = r + p.scaled(Rational(1) / fact);
    }
    return r;
  }

  // log of a series with constant term 1
  TruncatedSeries log() const {
    if (!coeff_is_one(c_[0]))
      fail(ErrorKind::ConstantTermNotOne, "series log needs constant term 1");
    TruncatedSeries u(*this);
    u.c_[0] = coeff_zero_like(c_[0]);  // u = f - 1
    TruncatedSeries r(var_, order_, coeff_zero_like(c_[0]), budget_);
    TruncatedSeries p = one(var_, order_, c_[0], budget_);
    for (int j = 1; j <= order_; ++j) {
      p = p * u;
      r = r + p.scaled(Rational(j % 2 == 1 ? 1 : -1) / Rational(j));
    }
    return r;
  }

private:
  void require_compatible(const TruncatedSeries& o) const {
    if (var_ != o.var_ || order_ != o.order_)
      fail(ErrorKind::Internal, "series variable/order mismatch");
  }
  std::string var_;
  int order_;
  long long budget_;
  std::vector<C> c_;
};

using LaurentSeries = TruncatedSeries<LaurentPolynomial>;
using FactoredSeries = TruncatedSeries<FactoredRational>;
using SumSeries = TruncatedSeries<RationalSum>;

}  // namespace kenum
