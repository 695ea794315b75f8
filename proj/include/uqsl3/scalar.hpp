#pragma once

/**
 * @file scalar.hpp
 * @brief Elements of the rational function field Q(q, alpha).
 *
 * A Scalar is num/den with both polynomials free of negative exponents,
 * gcd(num, den) = 1, and den primitive integral with positive leading
 * coefficient under graded-lex (q before alpha). These conditions make the
 * representation unique, so equality is structural.
 */

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "uqsl3/errors.hpp"
#include "uqsl3/poly_gcd.hpp"
#include "uqsl3/polynomial.hpp"

namespace uqsl3 {

/// Specialization point for q and alpha. q0 must avoid 0 and +-1 (the only
/// rational roots of unity), alpha0 must be nonzero.
struct EvalPoint {
  mpq_class q0;
  mpq_class alpha0;

  EvalPoint(mpq_class q, mpq_class alpha) : q0(std::move(q)), alpha0(std::move(alpha)) {
    q0.canonicalize();
    alpha0.canonicalize();
    if (q0 == 0 || q0 == 1 || q0 == -1) throw DomainError("q0 must differ from 0, 1 and -1");
    if (alpha0 == 0) throw DomainError("alpha0 must be nonzero");
  }
};

class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& c) : num_(c), den_(1) {}

  static Scalar q() { return q_power(1); }
  static Scalar alpha() { return alpha_power(1); }
  static Scalar q_power(int k) { return monomial(1, k, 0); }
  static Scalar alpha_power(int k) { return monomial(1, 0, k); }

  /// c * q^qe * alpha^ae with signed exponents.
  static Scalar monomial(const mpq_class& c, int qe, int ae) {
    Scalar s;
    if (c == 0) return s;
    s.num_ = Poly::monomial(c, std::max(qe, 0), std::max(ae, 0));
    s.den_ = Poly::monomial(1, std::max(-qe, 0), std::max(-ae, 0));
    return s;
  }

  /// Canonical form of num/den; both may be Laurent polynomials.
  static Scalar fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("Scalar with zero denominator");
    Scalar s;
    if (num.is_zero()) return s;
    const Monomial mn = num.min_exponents();
    const Monomial md = den.min_exponents();
    Poly n = num.shifted({-mn.q, -mn.a});
    Poly d = den.shifted({-md.q, -md.a});
    if (!n.is_constant() && !d.is_constant()) {
      const Poly g = poly_gcd(n, d);
      if (!g.is_one()) {
        n = exact_divide(n, g);
        d = exact_divide(d, g);
      }
    }
    const Monomial shift = mn - md;
    n = n.shifted({std::max(shift.q, 0), std::max(shift.a, 0)});
    d = d.shifted({std::max(-shift.q, 0), std::max(-shift.a, 0)});
    mpq_class c = d.content();
    if (d.leading().coeff < 0) c = -c;
    if (c != 1) {
      const mpq_class inv = 1 / c;
      n = n.scaled(inv);
      d = d.scaled(inv);
    }
    s.num_ = std::move(n);
    s.den_ = std::move(d);
    return s;
  }

  static Scalar from_poly(const Poly& p) { return fraction(p, Poly(1)); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is a rational number.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class rational_value() const { return num_.constant_value() / den_.constant_value(); }
  bool involves_alpha() const { return num_.involves_alpha() || den_.involves_alpha(); }

  Scalar operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) {
      if (x.den_.is_monomial()) return fraction_coprime_monomial(x.num_ + y.num_, x.den_);
      return fraction(x.num_ + y.num_, x.den_);
    }
    if (x.den_.is_monomial() && y.den_.is_monomial()) {
      return fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    const Poly g = poly_gcd(x.den_, y.den_);
    if (g.is_one()) return fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    const Poly xd = exact_divide(x.den_, g);
    const Poly yd = exact_divide(y.den_, g);
    return fraction(x.num_ * yd + y.num_ * xd, x.den_ * yd);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.den_.is_one() && y.den_.is_one()) {
      Scalar s;
      s.num_ = x.num_ * y.num_;
      s.den_ = Poly(1);
      return s;
    }
    if (x.num_.is_monomial() && x.den_.is_monomial() && y.num_.is_monomial() && y.den_.is_monomial()) {
      return fraction(x.num_ * y.num_, x.den_ * y.den_);
    }
    // Cross-cancel first so the final gcd works on smaller operands.
    Poly xn = x.num_, xd = x.den_, yn = y.num_, yd = y.den_;
    cancel(xn, yd);
    cancel(yn, xd);
    return fraction(xn * yn, xd * yd);
  }

  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    return fraction(den_, num_);
  }

  Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar s;
    s.num_ = num_.pow(static_cast<unsigned>(e));
    s.den_ = den_.pow(static_cast<unsigned>(e));
    return s;
  }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Text with integer coefficients, e.g. `(q^2+1)/q`.
  std::string str() const;

 private:
  // num/den where den is a monomial already in canonical shape; only the
  // monomial part of num can cancel.
  static Scalar fraction_coprime_monomial(const Poly& num, const Poly& den) {
    if (num.is_zero()) return {};
    const Monomial mn = num.min_exponents();
    const Monomial md = den.leading().mono;
    if (mn.q == 0 && mn.a == 0) {
      Scalar s;
      s.num_ = num;
      s.den_ = den;
      return s;
    }
    const Monomial common{std::min(mn.q, md.q), std::min(mn.a, md.a)};
    Scalar s;
    s.num_ = num.shifted({-common.q, -common.a});
    s.den_ = den.shifted({-common.q, -common.a});
    return s;
  }

  static void cancel(Poly& n, Poly& d) {
    if (n.is_constant() || d.is_constant()) return;
    const Poly g = poly_gcd(n, d);
    if (g.is_constant()) return;
    n = exact_divide(n, g);
    d = exact_divide(d, g);
  }

  Poly num_;
  Poly den_;
};

namespace detail {

inline bool is_single_factor(const Poly& p) {
  if (p.size() != 1) return false;
  const auto& t = p.leading();
  const bool has_q = t.mono.q != 0;
  const bool has_a = t.mono.a != 0;
  if (!has_q && !has_a) return true;
  return t.coeff == 1 && !(has_q && has_a);
}

}  // namespace detail

inline std::string Scalar::str() const {
  // Scale numerator and denominator by the numerator's coefficient
  // denominators so both print with integer coefficients.
  mpz_class l = num_.denominator_lcm();
  Poly n = num_.scaled(mpq_class(l));
  Poly d = den_.scaled(mpq_class(l));
  if (l != 1) {
    mpz_class g;
    mpq_class nc = n.content();
    mpz_gcd(g.get_mpz_t(), nc.get_num_mpz_t(), l.get_mpz_t());
    if (g != 1) {
      n = n.scaled(mpq_class(1, 1) / mpq_class(g));
      d = d.scaled(mpq_class(1, 1) / mpq_class(g));
    }
  }
  if (d.is_one()) return n.str();
  std::string ns = n.str();
  if (n.size() > 1) ns = "(" + ns + ")";
  std::string ds = d.str();
  if (!detail::is_single_factor(d)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

/// Exact value at p; throws EvaluationError when the denominator vanishes.
inline mpq_class evaluate(const Scalar& s, const EvalPoint& p) {
  const mpq_class d = s.denominator().evaluate(p.q0, p.alpha0);
  if (d == 0) throw EvaluationError("denominator of " + s.str() + " vanishes at the evaluation point");
  mpq_class v = s.numerator().evaluate(p.q0, p.alpha0) / d;
  v.canonicalize();
  return v;
}

/// [n] = (q^n - q^-n)/(q - q^-1), a Laurent polynomial in q.
inline Scalar q_integer(int n) {
  if (n == 0) return {};
  if (n < 0) return -q_integer(-n);
  std::vector<Poly::Term> terms;
  for (int i = 0; i < n; ++i) terms.push_back({{2 * i, 0}, mpq_class(1)});
  return Scalar::fraction(Poly::from_terms(std::move(terms)), Poly::monomial(1, n - 1, 0));
}

inline Scalar q_factorial(int n) {
  Scalar r = 1;
  for (int i = 2; i <= n; ++i) r *= q_integer(i);
  return r;
}

/// [n]!/([k]![n-k]!), zero outside 0 <= k <= n.
inline Scalar q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  return q_factorial(n) / (q_factorial(k) * q_factorial(n - k));
}

}  // namespace uqsl3
