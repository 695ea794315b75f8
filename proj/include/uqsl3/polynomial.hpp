#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse polynomials in q and alpha over the rationals.
 *
 * Terms are kept sorted by graded-lexicographic order with q before alpha,
 * largest first, and never carry a zero coefficient. Exponents are signed so
 * that Laurent polynomials can be built directly; the fraction type clears
 * negative exponents into its denominator.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uqsl3/errors.hpp"

namespace uqsl3 {

struct Monomial {
  int q = 0;
  int a = 0;

  constexpr int degree() const { return q + a; }
  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr Monomial operator+(Monomial x, Monomial y) { return {x.q + y.q, x.a + y.a}; }
  friend constexpr Monomial operator-(Monomial x, Monomial y) { return {x.q - y.q, x.a - y.a}; }
};

constexpr bool glex_less(Monomial x, Monomial y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return x.q < y.q;
}

struct GlexGreater {
  constexpr bool operator()(Monomial x, Monomial y) const { return glex_less(y, x); }
};

inline mpq_class rational_power(const mpq_class& base, int e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero("zero raised to a negative power");
    return rational_power(mpq_class(1) / base, -e);
  }
  mpq_class result = 1;
  mpq_class b = base;
  for (unsigned n = static_cast<unsigned>(e); n != 0; n >>= 1) {
    if (n & 1u) result *= b;
    if (n > 1) b *= b;
  }
  return result;
}

class Poly {
 public:
  struct Term {
    Monomial mono;
    mpq_class coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(const mpq_class& c) {
    if (c != 0) terms_.push_back({{0, 0}, c});
  }
  Poly(long c) : Poly(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const mpq_class& c, int q_exp, int a_exp) {
    Poly p;
    if (c != 0) p.terms_.push_back({{q_exp, a_exp}, c});
    return p;
  }
  static Poly q() { return monomial(1, 1, 0); }
  static Poly alpha() { return monomial(1, 0, 1); }

  /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return glex_less(y.mono, x.mono); });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{}); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coeff == 1; }
  const Term& leading() const { return terms_.front(); }
  mpq_class constant_value() const { return terms_.empty() ? mpq_class(0) : terms_[0].coeff; }

  bool involves_alpha() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.a != 0; });
  }

  /// Componentwise minimum of exponents (the largest dividing monomial).
  Monomial min_exponents() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) {
      m.q = std::min(m.q, t.mono.q);
      m.a = std::min(m.a, t.mono.a);
    }
    return m;
  }

  int max_q() const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.mono.q > m) m = t.mono.q;
      first = false;
    }
    return m;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Poly operator+(const Poly& x, const Poly& y) { return merge(x, y, false); }
  friend Poly operator-(const Poly& x, const Poly& y) { return merge(x, y, true); }
  Poly& operator+=(const Poly& y) { return *this = merge(*this, y, false); }
  Poly& operator-=(const Poly& y) { return *this = merge(*this, y, true); }

  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.is_monomial()) return y.scaled_shifted(x.terms_[0].coeff, x.terms_[0].mono);
    if (y.is_monomial()) return x.scaled_shifted(y.terms_[0].coeff, y.terms_[0].mono);
    std::map<Monomial, mpq_class, GlexGreater> acc;
    mpq_class prod;
    for (const auto& a : x.terms_) {
      for (const auto& b : y.terms_) {
        mpq_mul(prod.get_mpq_t(), a.coeff.get_mpq_t(), b.coeff.get_mpq_t());
        acc[a.mono + b.mono] += prod;
      }
    }
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    }
    return r;
  }
  Poly& operator*=(const Poly& y) { return *this = *this * y; }

  Poly scaled(const mpq_class& c) const { return scaled_shifted(c, {}); }
  Poly shifted(Monomial m) const { return scaled_shifted(1, m); }

  Poly scaled_shifted(const mpq_class& c, Monomial m) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono + m;
      if (c != 1) t.coeff *= c;
    }
    return r;
  }

  Poly pow(unsigned e) const {
    Poly result(1);
    Poly b = *this;
    for (; e != 0; e >>= 1) {
      if (e & 1u) result *= b;
      if (e > 1) b *= b;
    }
    return result;
  }

  mpq_class evaluate(const mpq_class& q0, const mpq_class& a0) const {
    mpq_class sum = 0;
    for (const auto& t : terms_) sum += t.coeff * rational_power(q0, t.mono.q) * rational_power(a0, t.mono.a);
    return sum;
  }

  /// Least common multiple of the coefficient denominators.
  mpz_class denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
  }

  /// Positive rational c with this = c * (primitive integral polynomial).
  mpq_class content() const {
    if (terms_.empty()) return 1;
    mpz_class g = 0;
    for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpq_class c(g, denominator_lcm());
    c.canonicalize();
    return c;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Text with integer or rational coefficients, e.g. `q^2*alpha-3*q+1`.
  std::string str() const;

 private:
  static Poly merge(const Poly& x, const Poly& y, bool subtract) {
    Poly r;
    r.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && glex_less(j->mono, i->mono))) {
        r.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || glex_less(i->mono, j->mono)) {
        r.terms_.push_back({j->mono, subtract ? mpq_class(-j->coeff) : j->coeff});
        ++j;
      } else {
        mpq_class c = subtract ? mpq_class(i->coeff - j->coeff) : mpq_class(i->coeff + j->coeff);
        if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

namespace detail {

inline std::string monomial_str(Monomial m) {
  std::string s;
  auto var = [&s](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) s += '^' + std::to_string(e);
  };
  var("q", m.q);
  var("alpha", m.a);
  return s;
}

}  // namespace detail

inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      s += '-';
    } else if (!first) {
      s += '+';
    }
    std::string mono = detail::monomial_str(t.mono);
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
    first = false;
  }
  return s;
}

}  // namespace uqsl3
