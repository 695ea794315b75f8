#pragma once

/**
 * @file field.hpp
 * @brief Coefficient fields the engines are parameterized over.
 *
 * SymbolicField works in Q(q, alpha) with Scalar values. EvaluatedField
 * works in Q with q and alpha replaced by the rationals of an EvalPoint;
 * symbolic inputs are brought over with lift(). Both provide the same small
 * interface, captured by the CoefficientField concept.
 */

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <utility>

#include "uqsl3/errors.hpp"
#include "uqsl3/scalar.hpp"

namespace uqsl3 {

/// Rational number with checked division.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.v_ == 0) throw DivisionByZero();
    return Rational(mpq_class(x.v_ / y.v_));
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(int e) const { return Rational(rational_power(v_, e)); }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& x, const Scalar& s, int k) {
  typename F::value_type;
  { f.q_power(k) } -> std::same_as<typename F::value_type>;
  { f.alpha_power(k) } -> std::same_as<typename F::value_type>;
  { f.lift(s) } -> std::same_as<typename F::value_type>;
  { f.render(x) } -> std::same_as<std::string>;
  { x + x } -> std::same_as<typename F::value_type>;
  { x * x } -> std::same_as<typename F::value_type>;
  { x / x } -> std::same_as<typename F::value_type>;
  { x.is_zero() } -> std::same_as<bool>;
  { x.pow(k) } -> std::same_as<typename F::value_type>;
};

struct SymbolicField {
  using value_type = Scalar;

  Scalar q_power(int k) const { return Scalar::q_power(k); }
  Scalar alpha_power(int k) const { return Scalar::alpha_power(k); }
  Scalar lift(const Scalar& s) const { return s; }
  std::string render(const Scalar& s) const { return s.str(); }
  std::string name() const { return "symbolic"; }
};

struct EvaluatedField {
  using value_type = Rational;

  EvalPoint point;

  explicit EvaluatedField(EvalPoint p) : point(std::move(p)) {}

  Rational q_power(int k) const { return Rational(rational_power(point.q0, k)); }
  Rational alpha_power(int k) const { return Rational(rational_power(point.alpha0, k)); }
  Rational lift(const Scalar& s) const { return Rational(evaluate(s, point)); }
  std::string render(const Rational& r) const { return r.str(); }
  std::string name() const { return "q=" + point.q0.get_str() + ",alpha=" + point.alpha0.get_str(); }
};

static_assert(CoefficientField<SymbolicField>);
static_assert(CoefficientField<EvaluatedField>);

/// q-integer [n] in the field; [-n] = -[n].
template <CoefficientField F>
typename F::value_type q_int(const F& f, int n) {
  using T = typename F::value_type;
  if constexpr (std::same_as<F, SymbolicField>) {
    return q_integer(n);
  } else {
    if (n < 0) return -q_int(f, -n);
    T sum = 0;
    for (int i = 0; i < n; ++i) sum += f.q_power(n - 1 - 2 * i);
    return sum;
  }
}

template <CoefficientField F>
typename F::value_type q_binom(const F& f, int n, int k) {
  using T = typename F::value_type;
  if (n < 0 || k < 0 || k > n) return T(0);
  if constexpr (std::same_as<F, SymbolicField>) {
    return q_binomial(n, k);
  } else {
    T num = 1;
    T den = 1;
    for (int i = 1; i <= k; ++i) {
      num *= q_int(f, n - k + i);
      den *= q_int(f, i);
    }
    return num / den;
  }
}

/// (q - q^-1)^k, the denominators the commutation rules introduce.
template <CoefficientField F>
typename F::value_type q_diff_power(const F& f, int k) {
  return (f.q_power(1) - f.q_power(-1)).pow(k);
}

}  // namespace uqsl3
