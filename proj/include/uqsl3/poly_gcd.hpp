#pragma once

/**
 * @file poly_gcd.hpp
 * @brief GCD and exact division for polynomials in Q[q, alpha].
 *
 * The GCD strips monomial and rational content first, then runs a primitive
 * polynomial remainder sequence: over Z[q] when neither operand involves
 * alpha, otherwise over Z[q][alpha] with Z[q] contents removed at each step.
 * Results are primitive integral polynomials with positive leading
 * coefficient under the graded-lex order.
 */

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "uqsl3/errors.hpp"
#include "uqsl3/polynomial.hpp"

namespace uqsl3 {

namespace detail {

// Dense univariate polynomial in q over Z, index = degree.
using UPoly = std::vector<mpz_class>;
// Polynomial in alpha whose coefficients are UPoly, index = alpha degree.
using RPoly = std::vector<UPoly>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline mpz_class content(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline UPoly divide(UPoly p, const mpz_class& c) {
  if (c == 1) return p;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

/// Primitive part with positive leading coefficient.
inline UPoly primitive(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  return divide(std::move(p), c);
}

inline UPoly mul(const UPoly& x, const UPoly& y) {
  if (x.empty() || y.empty()) return {};
  UPoly r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  trim(r);
  return r;
}

inline UPoly sub(const UPoly& x, const UPoly& y) {
  UPoly r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  trim(r);
  return r;
}

inline UPoly scale(const UPoly& x, const mpz_class& c) {
  if (c == 0) return {};
  UPoly r = x;
  for (auto& v : r) v *= c;
  return r;
}

/// Pseudo-remainder of a by b (up to a unit multiple in Q).
inline UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (degree(a) >= db) {
    mpz_class la = a.back();
    const int shift = degree(a) - db;
    for (auto& v : a) v *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    a = primitive(std::move(a));
  }
  return a;
}

/// Primitive gcd in Z[q] (integer content ignored), positive leading coefficient.
inline UPoly primitive_gcd(UPoly a, UPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return UPoly{1};
    UPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return a;
}

/// Full gcd in Z[q] including the integer content.
inline UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  return scale(primitive_gcd(a, b), c);
}

/// Exact quotient in Z[q]; throws when b does not divide a.
inline UPoly exact_quotient(UPoly a, const UPoly& b) {
  if (b.empty()) throw DivisionByZero();
  trim(a);
  if (a.empty()) return {};
  if (degree(a) < degree(b)) throw Error("exact_quotient: not divisible");
  UPoly quot(degree(a) - degree(b) + 1);
  const mpz_class& lb = b.back();
  while (!a.empty() && degree(a) >= degree(b)) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) throw Error("exact_quotient: not divisible");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    const int shift = degree(a) - degree(b);
    quot[shift] = c;
    for (int i = 0; i <= degree(b); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw Error("exact_quotient: not divisible");
  return quot;
}

inline int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly content(const RPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? primitive(c) : gcd(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  if (!g.empty() && g.back() < 0) g = scale(g, -1);
  return g;
}

inline RPoly divide(const RPoly& p, const UPoly& c) {
  RPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].empty()) r[i] = exact_quotient(p[i], c);
  }
  trim(r);
  return r;
}

inline RPoly primitive(const RPoly& p) {
  UPoly c = content(p);
  if (c.empty()) return {};
  RPoly r = divide(p, c);
  if (!r.empty() && r.back().back() < 0) {
    for (auto& u : r) u = scale(u, -1);
  }
  return r;
}

inline RPoly pseudo_remainder(RPoly a, const RPoly& b) {
  const int db = degree(b);
  const UPoly& lb = b.back();
  while (degree(a) >= db) {
    UPoly la = a.back();
    const int shift = degree(a) - db;
    for (auto& u : a) u = mul(u, lb);
    for (int i = 0; i <= db; ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
    trim(a);
    if (!a.empty()) a = primitive(a);
  }
  return a;
}

inline RPoly primitive_gcd(RPoly a, RPoly b) {
  a = primitive(a);
  b = primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return RPoly{UPoly{1}};
    RPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return a;
}

// Integral polynomial -> representations (exponents must be nonnegative).
inline UPoly to_upoly(const Poly& p) {
  UPoly r;
  for (const auto& t : p.terms()) {
    if (static_cast<int>(r.size()) <= t.mono.q) r.resize(t.mono.q + 1);
    r[t.mono.q] += t.coeff.get_num();
  }
  trim(r);
  return r;
}

inline RPoly to_rpoly(const Poly& p) {
  RPoly r;
  for (const auto& t : p.terms()) {
    if (static_cast<int>(r.size()) <= t.mono.a) r.resize(t.mono.a + 1);
    UPoly& u = r[t.mono.a];
    if (static_cast<int>(u.size()) <= t.mono.q) u.resize(t.mono.q + 1);
    u[t.mono.q] += t.coeff.get_num();
  }
  for (auto& u : r) trim(u);
  trim(r);
  return r;
}

inline Poly from_upoly(const UPoly& u, int alpha_exp = 0) {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) terms.push_back({{static_cast<int>(i), alpha_exp}, mpq_class(u[i])});
  }
  return Poly::from_terms(std::move(terms));
}

inline Poly from_rpoly(const RPoly& r) {
  std::vector<Poly::Term> terms;
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t i = 0; i < r[a].size(); ++i) {
      if (r[a][i] != 0) terms.push_back({{static_cast<int>(i), static_cast<int>(a)}, mpq_class(r[a][i])});
    }
  }
  return Poly::from_terms(std::move(terms));
}

/// Scales to a primitive integral polynomial with positive leading coefficient.
inline Poly normalize_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpq_class c = p.content();
  if (p.leading().coeff < 0) c = -c;
  return p.scaled(1 / c);
}

}  // namespace detail

/// Greatest common divisor of two polynomials with nonnegative exponents,
/// normalized to be primitive integral with positive leading coefficient.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return detail::normalize_primitive(b);
  if (b.is_zero()) return detail::normalize_primitive(a);
  const Monomial ma = a.min_exponents();
  const Monomial mb = b.min_exponents();
  const Monomial common{std::min(ma.q, mb.q), std::min(ma.a, mb.a)};
  const Poly common_mono = Poly::monomial(1, common.q, common.a);
  const Poly ra = detail::normalize_primitive(a.shifted({-ma.q, -ma.a}));
  const Poly rb = detail::normalize_primitive(b.shifted({-mb.q, -mb.a}));
  if (ra.is_constant() || rb.is_constant()) return common_mono;
  if (ra == rb) return ra * common_mono;

  Poly g;
  if (!ra.involves_alpha() && !rb.involves_alpha()) {
    g = detail::from_upoly(detail::primitive_gcd(detail::to_upoly(ra), detail::to_upoly(rb)));
  } else if (!ra.involves_alpha() || !rb.involves_alpha()) {
    // gcd(f(q), P(q, alpha)) = gcd(f, content_alpha(P)).
    const Poly& uni = ra.involves_alpha() ? rb : ra;
    const Poly& bi = ra.involves_alpha() ? ra : rb;
    detail::UPoly c = detail::content(detail::to_rpoly(bi));
    g = detail::from_upoly(detail::primitive_gcd(detail::to_upoly(uni), c));
  } else {
    detail::RPoly pa = detail::to_rpoly(ra);
    detail::RPoly pb = detail::to_rpoly(rb);
    detail::UPoly cg = detail::primitive_gcd(detail::content(pa), detail::content(pb));
    detail::RPoly pg = detail::primitive_gcd(detail::primitive(pa), detail::primitive(pb));
    g = detail::from_upoly(cg) * detail::from_rpoly(pg);
  }
  return detail::normalize_primitive(g * common_mono);
}

/// Exact quotient a / b; throws when the division leaves a remainder.
inline Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& t = b.leading();
    return a.scaled_shifted(1 / t.coeff, {-t.mono.q, -t.mono.a});
  }
  std::map<Monomial, mpq_class, GlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  const auto& lb = b.leading();
  std::vector<Poly::Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    const Monomial m = it->first - lb.mono;
    if (m.q < 0 || m.a < 0) throw Error("exact_divide: not divisible");
    mpq_class c = it->second / lb.coeff;
    for (const auto& t : b.terms()) {
      auto& slot = rem[t.mono + m];
      slot -= c * t.coeff;
      if (slot == 0) rem.erase(t.mono + m);
    }
    quot.push_back({m, std::move(c)});
  }
  return Poly::from_terms(std::move(quot));
}

}  // namespace uqsl3
