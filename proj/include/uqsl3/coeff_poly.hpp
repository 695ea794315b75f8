#pragma once

/**
 * @file coeff_poly.hpp
 * @brief Laurent polynomials in K and polynomials in C1 over a coefficient field.
 *
 * K = K1 K2^2 is invertible, C1 is not; no operation here divides by a
 * polynomial, so C1 never acquires an inverse.
 */

#include <map>
#include <string>
#include <utility>

#include "uqsl3/errors.hpp"

namespace uqsl3 {

template <class T>
class CoeffPoly {
 public:
  /// Exponents (p, r) of K^p C1^r.
  using Key = std::pair<int, int>;
  using Map = std::map<Key, T>;

  CoeffPoly() = default;

  static CoeffPoly constant(const T& c) { return term(c, 0, 0); }
  static CoeffPoly one() { return constant(T(1)); }
  static CoeffPoly k_power(int p) { return term(T(1), p, 0); }
  static CoeffPoly c1() { return term(T(1), 0, 1); }

  static CoeffPoly term(const T& c, int p, int r) {
    if (r < 0) throw DomainError("C1 has no inverse");
    CoeffPoly x;
    x.add_term(p, r, c);
    return x;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}); }
  bool involves_c1() const {
    for (const auto& [k, v] : terms_) {
      if (k.second != 0) return true;
    }
    return false;
  }

  T constant_term() const {
    auto it = terms_.find(Key{0, 0});
    return it == terms_.end() ? T(0) : it->second;
  }

  T coefficient(int p, int r) const {
    auto it = terms_.find(Key{p, r});
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(int p, int r, const T& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{p, r}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add_scaled(const CoeffPoly& other, const T& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add_term(k.first, k.second, v * c);
  }

  CoeffPoly scaled(const T& c) const {
    CoeffPoly r;
    r.add_scaled(*this, c);
    return r;
  }

  /// Multiplication by c K^p.
  CoeffPoly shifted(int p, const T& c) const {
    CoeffPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), Key{k.first + p, k.second}, v * c);
    return r;
  }

  CoeffPoly operator-() const { return scaled(T(-1)); }
  friend CoeffPoly operator+(CoeffPoly x, const CoeffPoly& y) { return x += y; }
  friend CoeffPoly operator-(CoeffPoly x, const CoeffPoly& y) { return x -= y; }
  CoeffPoly& operator+=(const CoeffPoly& y) {
    for (const auto& [k, v] : y.terms_) add_term(k.first, k.second, v);
    return *this;
  }
  CoeffPoly& operator-=(const CoeffPoly& y) {
    for (const auto& [k, v] : y.terms_) add_term(k.first, k.second, -v);
    return *this;
  }

  friend CoeffPoly operator*(const CoeffPoly& x, const CoeffPoly& y) {
    CoeffPoly r;
    for (const auto& [kx, vx] : x.terms_) {
      for (const auto& [ky, vy] : y.terms_) r.add_term(kx.first + ky.first, kx.second + ky.second, vx * vy);
    }
    return r;
  }

  /// Value with K = kappa and C1 = c.
  T substitute(const T& kappa, const T& c) const {
    T sum(0);
    for (const auto& [k, v] : terms_) sum += v * kappa.pow(k.first) * c.pow(k.second);
    return sum;
  }

  friend bool operator==(const CoeffPoly& x, const CoeffPoly& y) { return x.terms_ == y.terms_; }

 private:
  Map terms_;
};

/// `c K^p C1^r` terms joined by ` + `, highest C1 power first.
template <class F, class T>
std::string render(const F& field, const CoeffPoly<T>& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto [p, r] = it->first;
    std::string mono;
    if (p != 0) mono += p == 1 ? "K" : "K^" + std::to_string(p);
    if (r != 0) {
      if (!mono.empty()) mono += ' ';
      mono += r == 1 ? "C1" : "C1^" + std::to_string(r);
    }
    std::string c = field.render(it->second);
    if (!s.empty()) s += " + ";
    if (mono.empty()) {
      s += c;
    } else if (c == "1") {
      s += mono;
    } else {
      s += "(" + c + ") " + mono;
    }
  }
  return s;
}

}  // namespace uqsl3
