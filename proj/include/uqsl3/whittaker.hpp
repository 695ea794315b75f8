#pragma once

/**
 * @file whittaker.hpp
 * @brief The universal Whittaker module M(eta) with eta(E1) = alpha, eta(E2) = 0.
 *
 * Elements are finite sums of F2^j F3^k K2^l Q(K, C1) v, stored as a map
 * from (j, k, l) to Q. Generators act through closed recursions on this
 * basis; E3 and F3 act through their Chevalley expansions. Quotients by the
 * maximal ideals J(kappa, c) = <K - kappa, C1 - c> are taken by substitution.
 */

#include <compare>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "uqsl3/coeff_poly.hpp"
#include "uqsl3/errors.hpp"
#include "uqsl3/field.hpp"
#include "uqsl3/pbw.hpp"

namespace uqsl3 {

struct BasisIndex {
  int j = 0;
  int k = 0;
  int l = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Rank of l under |l| > |l'|, with l ahead of -l for l > 0.
constexpr int l_rank(int l) { return l >= 0 ? 2 * l : -2 * l - 1; }

/// Total order on indices: by j + k, then k, then l_rank(l).
constexpr bool degree_less(const BasisIndex& a, const BasisIndex& b) {
  if (a.j + a.k != b.j + b.k) return a.j + a.k < b.j + b.k;
  if (a.k != b.k) return a.k < b.k;
  return l_rank(a.l) < l_rank(b.l);
}

struct DegreeLess {
  constexpr bool operator()(const BasisIndex& a, const BasisIndex& b) const { return degree_less(a, b); }
};

template <class T>
class ModuleElement {
 public:
  using Map = std::map<BasisIndex, CoeffPoly<T>>;

  ModuleElement() = default;

  static ModuleElement basis(BasisIndex idx, CoeffPoly<T> q) {
    ModuleElement m;
    m.add(idx, q);
    return m;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CoeffPoly<T> coefficient(const BasisIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? CoeffPoly<T>() : it->second;
  }

  void add(const BasisIndex& idx, const CoeffPoly<T>& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, q);
    if (inserted) return;
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Adds c K^p Q at idx.
  void add_shifted(const BasisIndex& idx, const CoeffPoly<T>& q, int p, const T& c) {
    if (c.is_zero()) return;
    add(idx, q.shifted(p, c));
  }

  void add_scaled(const ModuleElement& other, const T& c) {
    if (c.is_zero()) return;
    for (const auto& [idx, q] : other.terms_) add(idx, q.scaled(c));
  }

  ModuleElement scaled(const T& c) const {
    ModuleElement r;
    r.add_scaled(*this, c);
    return r;
  }

  ModuleElement operator-() const { return scaled(T(-1)); }
  friend ModuleElement operator+(ModuleElement x, const ModuleElement& y) { return x += y; }
  friend ModuleElement operator-(ModuleElement x, const ModuleElement& y) { return x -= y; }
  ModuleElement& operator+=(const ModuleElement& y) {
    for (const auto& [idx, q] : y.terms_) add(idx, q);
    return *this;
  }
  ModuleElement& operator-=(const ModuleElement& y) {
    for (const auto& [idx, q] : y.terms_) add(idx, -q);
    return *this;
  }

  /// Largest support index under the degree order.
  BasisIndex degree() const {
    if (terms_.empty()) throw DomainError("the zero vector has no degree");
    BasisIndex best = terms_.begin()->first;
    for (const auto& [idx, q] : terms_) {
      if (degree_less(best, idx)) best = idx;
    }
    return best;
  }

  friend bool operator==(const ModuleElement& x, const ModuleElement& y) { return x.terms_ == y.terms_; }

 private:
  Map terms_;
};

template <class F, class T>
std::string render(const F& field, const ModuleElement<T>& m) {
  if (m.is_zero()) return "0";
  std::string s;
  for (const auto& [idx, q] : m.terms()) {
    std::string part;
    auto put = [&part](const char* name, int e) {
      if (e == 0) return;
      part += name;
      if (e != 1) part += "^" + std::to_string(e);
      part += ' ';
    };
    put("F2", idx.j);
    put("F3", idx.k);
    put("K2", idx.l);
    const std::string qs = render(field, q);
    if (qs != "1") part += "(" + qs + ") ";
    part += "v";
    if (!s.empty()) s += " + ";
    s += part;
  }
  return s;
}

/// Zero ideal or J(kappa, c).
template <class T>
struct IdealSpec {
  struct Zero {};
  struct Maximal {
    T kappa;
    T c;
  };
  std::variant<Zero, Maximal> value;

  static IdealSpec zero() { return {Zero{}}; }
  static IdealSpec maximal(T kappa, T c) {
    if (kappa.is_zero()) throw DomainError("kappa must be nonzero");
    return {Maximal{std::move(kappa), std::move(c)}};
  }
  bool is_zero_ideal() const { return std::holds_alternative<Zero>(value); }
};

template <CoefficientField F>
class WhittakerModule {
 public:
  using T = typename F::value_type;
  using Poly = CoeffPoly<T>;
  using Element = ModuleElement<T>;

  explicit WhittakerModule(F field) : WhittakerModule(field, field.alpha_power(1)) {}

  WhittakerModule(F field, T alpha) : field_(std::move(field)), alpha_(std::move(alpha)) {
    if (alpha_.is_zero()) throw DomainError("alpha must be nonzero");
    const T d = field_.q_power(1) - field_.q_power(-1);
    inv_diff_ = T(1) / d;
    inv_diff2_ = inv_diff_ * inv_diff_;
  }

  const F& field() const { return field_; }
  const T& alpha() const { return alpha_; }
  T q(int n) const { return field_.q_power(n); }

  /// Q v.
  Element vacuum(const Poly& q = Poly::one()) const { return Element::basis({0, 0, 0}, q); }

  Element act(Letter x, const Element& m) const {
    switch (x) {
      case Letter::E3: {
        Element r = act(Letter::E1, act(Letter::E2, m));
        r.add_scaled(act(Letter::E2, act(Letter::E1, m)), -q(-1));
        return r;
      }
      case Letter::F3: {
        Element r = act(Letter::F1, act(Letter::F2, m));
        r.add_scaled(act(Letter::F2, act(Letter::F1, m)), -q(1));
        return r;
      }
      default:
        break;
    }
    Element r;
    for (const auto& [idx, poly] : m.terms()) act_basis(x, idx, poly, r);
    return r;
  }

  /// Letters of w applied right to left.
  Element act(const Word& w, const Element& m) const {
    Element r = m;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = act(*it, r);
    return r;
  }

  Element act(const AlgebraElement<T>& a, const Element& m) const {
    Element r;
    for (const auto& [mono, c] : a.terms()) r.add_scaled(act(mono.word(), m), c);
    return r;
  }

  /// C1 = F1 E1 + (q K1 + q^-1 K1^-1) / (q - q^-1)^2 acting on m.
  Element act_c1(const Element& m) const {
    Element r = act(Letter::F1, act(Letter::E1, m));
    r.add_scaled(act(Letter::K1, m), q(1) * inv_diff2_);
    r.add_scaled(act(Letter::K1inv, m), q(-1) * inv_diff2_);
    return r;
  }

  /// K^p acting on m; K F2 = q^-3 F2 K and K F3 = q^-3 F3 K.
  Element act_k(const Element& m, int p) const {
    Element r;
    for (const auto& [idx, poly] : m.terms()) r.add_shifted(idx, poly, p, q(-3 * p * (idx.j + idx.k)));
    return r;
  }

  /// Image in V(eta; kappa, c): every coefficient becomes its value at (kappa, c).
  Element reduce(const Element& m, const IdealSpec<T>& ideal) const {
    if (ideal.is_zero_ideal()) return m;
    const auto& mx = std::get<typename IdealSpec<T>::Maximal>(ideal.value);
    Element r;
    for (const auto& [idx, poly] : m.terms()) r.add(idx, Poly::constant(poly.substitute(mx.kappa, mx.c)));
    return r;
  }

  /// h_n(K, C1) = q^{3-2n} K + q^{2n-3} K^-1 - (q - q^-1)^2 C1.
  Poly h_poly(int n) const {
    Poly h = Poly::term(q(3 - 2 * n), 1, 0);
    h.add_term(-1, 0, q(2 * n - 3));
    h.add_term(0, 1, -(T(1) / inv_diff2_));
    return h;
  }

  /// a_kj(n) = (-1)^j alpha^k (q^2-1)^k q^{j(n-3)} q^{k(2n+2j+k-7)/2} [n k] [n-k j].
  T a_coeff(int n, int k, int j) const {
    const int twice = k * (2 * n + 2 * j + k - 7);
    if (twice % 2 != 0) throw Error("a_kj exponent is not an integer");
    T c = field_.alpha_power(k) * (q(2) - T(1)).pow(k) * q(j * (n - 3) + twice / 2) * q_binom(field_, n, k) *
          q_binom(field_, n - k, j);
    return j % 2 == 0 ? c : -c;
  }

  /// b_kj(n) = q^{n+k-1} (q^2-1)^-1 [n] a_kj(n-1), the coefficient for which
  /// the E2 closed form holds exactly.
  T b_coeff(int n, int k, int j) const {
    return q(n + k - 1) / (q(2) - T(1)) * q_int(field_, n) * a_coeff(n - 1, k, j);
  }

  /// The same coefficient written with q^{n-j-1}; it differs from b_coeff by q^{k+j}.
  T b_coeff_displayed(int n, int k, int j) const { return b_coeff(n, k, j) * q(-k - j); }

  /// u(n, l, Q) = q^{2nl} K2^l sum a_kj(n) F2^{n-k} F3^k K2^{2j} K^{-2j-k} Q v.
  Element u_element(int n, int l, const Poly& Q) const {
    return u_like(n, l, Q, [this, n](int k, int j) { return a_coeff(n, k, j); }, 2 * n * l);
  }

  /// g^n Q v for g = F2 (1 - q^-2 K2^2 K^-2) + alpha (1 - q^-2) F3 K^-1,
  /// with g acting as an element of U.
  Element g_power(int n, const Poly& Q) const {
    Element r = vacuum(Q);
    for (int i = 0; i < n; ++i) r = apply_g(r);
    return r;
  }

  Element apply_g(const Element& m) const {
    Element inner = m;
    inner.add_scaled(act(Word{Letter::K2, Letter::K2}, act_k(m, -2)), -q(-2));
    Element r = act(Letter::F2, inner);
    r.add_scaled(act(Letter::F3, act_k(m, -1)), alpha_ * (T(1) - q(-2)));
    return r;
  }

  /// Closed form of E2 u(n, l, Q) for n >= 1:
  /// q^{2l(n-1)} K2^l sum b_kj(n) F2^{n-k-1} F3^k K2^{2j+1} K^{-k-2j-1} h_n Q v.
  Element e2_rhs(int n, int l, const Poly& Q) const {
    return e2_sum(n, l, Q, [this, n](int k, int j) { return b_coeff(n, k, j); });
  }

  /// e2_rhs built with b_coeff_displayed.
  Element e2_rhs_displayed(int n, int l, const Poly& Q) const {
    return e2_sum(n, l, Q, [this, n](int k, int j) { return b_coeff_displayed(n, k, j); });
  }

  /// Closed form of F1 u(n, l, Q).
  Element f1_rhs(int n, int l, const Poly& Q) const {
    Poly first = Poly::term(q(n - 3 - l), -1, 0);
    first.add_term(1, 0, q(3 - n - l));
    Element r = u_element(n, l, first * Q);
    r -= u_element(n, l + 2, Q.shifted(-1, q(-n - l - 1)));
    r -= u_element(n, l - 2, Q.shifted(1, q(n - l + 1)));
    r -= h_sum(n, l, Q, (2 * n - 1) * l);
    return r.scaled(inv_diff2_ / alpha_);
  }

  /// Closed form of C1 u(n, l, Q).
  Element c1_rhs(int n, int l, const Poly& Q) const {
    Poly first = Poly::term(q(n - 3), -1, 0);
    first.add_term(1, 0, q(3 - n));
    Element r = u_element(n, l, first * Q);
    r -= h_sum(n, l, Q, 2 * n * l);
    return r.scaled(inv_diff2_);
  }

  T inv_diff2() const { return inv_diff2_; }

 private:
  template <class Coeff>
  Element e2_sum(int n, int l, const Poly& Q, Coeff coeff) const {
    if (n < 1) throw DomainError("e2_rhs needs n >= 1");
    const Poly hq = h_poly(n) * Q;
    Element r;
    for (int k = 0; k <= n - 1; ++k) {
      // K2^l moves right past F2^{n-k-1} F3^k.
      const T shift = q(2 * l * (n - 1) - l * (2 * (n - k - 1) + k));
      for (int j = 0; j <= n - k - 1; ++j) r.add_shifted({n - k - 1, k, l + 2 * j + 1}, hq, -k - 2 * j - 1, shift * coeff(k, j));
    }
    return r;
  }

  // q^{lead} K2^l sum coeff(k, j) F2^{n-k} F3^k K2^{2j} K^{-2j-k} Q v, with
  // K2^l commuted to the right of the F part.
  template <class Coeff>
  Element u_like(int n, int l, const Poly& Q, Coeff coeff, int lead) const {
    Element r;
    for (int k = 0; k <= n; ++k) {
      const T shift = q(lead - l * (2 * (n - k) + k));
      for (int j = 0; j <= n - k; ++j) r.add_shifted({n - k, k, l + 2 * j}, Q, -2 * j - k, shift * coeff(k, j));
    }
    return r;
  }

  // q^{lead} K2^l sum q^{n-2k-2j} a_kj(n) F2^{n-k} F3^k K2^{2j} K^{-2j-k} h_n Q v.
  Element h_sum(int n, int l, const Poly& Q, int lead) const {
    const Poly hq = h_poly(n) * Q;
    return u_like(n, l, hq, [this, n](int k, int j) { return q(n - 2 * k - 2 * j) * a_coeff(n, k, j); }, lead);
  }

  // F1 Q v = alpha^-1 (C1 Q v - (q-q^-1)^-2 (q K2^-2 K Q v + q^-1 K2^2 K^-1 Q v)).
  void f1_vacuum(const Poly& poly, int l_shift, const BasisIndex& at, const T& c, Element& out) const {
    const T s = c / alpha_;
    out.add({at.j, at.k, at.l + l_shift}, (Poly::c1() * poly).scaled(s));
    out.add_shifted({at.j, at.k, at.l + l_shift - 2}, poly, 1, -s * inv_diff2_ * q(1));
    out.add_shifted({at.j, at.k, at.l + l_shift + 2}, poly, -1, -s * inv_diff2_ * q(-1));
  }

  void act_basis(Letter x, const BasisIndex& idx, const Poly& poly, Element& out) const {
    const int j = idx.j, k = idx.k, l = idx.l;
    switch (x) {
      case Letter::F2:
        out.add({j + 1, k, l}, poly);
        return;
      case Letter::K2:
        out.add({j, k, l + 1}, poly.scaled(q(-2 * j - k)));
        return;
      case Letter::K2inv:
        out.add({j, k, l - 1}, poly.scaled(q(2 * j + k)));
        return;
      case Letter::K1:
        out.add_shifted({j, k, l - 2}, poly, 1, q(j - k));
        return;
      case Letter::K1inv:
        out.add_shifted({j, k, l + 2}, poly, -1, q(k - j));
        return;
      case Letter::E1:
        // [E1, F2^j F3^k] = [k] F2^{j+1} F3^{k-1} K1^-1 and E1 K2^l Q v = alpha q^l K2^l Q v.
        if (k > 0) out.add_shifted({j + 1, k - 1, l + 2}, poly, -1, q_int(field_, k));
        out.add({j, k, l}, poly.scaled(alpha_ * q(l)));
        return;
      case Letter::E2: {
        // [E2, F2^j F3^k] = [j] F2^{j-1} F3^k [K2; 1-j-k] - q^{1-k} [k] F2^j F3^{k-1} K2 F1, E2 Q v = 0.
        if (j > 0) {
          const int a = 1 - j - k;
          const T c = q_int(field_, j) * inv_diff_;
          out.add({j - 1, k, l + 1}, poly.scaled(c * q(a)));
          out.add({j - 1, k, l - 1}, poly.scaled(-c * q(-a)));
        }
        if (k > 0) f1_vacuum(poly, l + 1, {j, k - 1, 0}, -q(1 - k - l) * q_int(field_, k), out);
        return;
      }
      case Letter::F1:
        // F1 F2^j = [j] F2^{j-1} F3 + q^j F2^j F1, F1 F3^k K2^l = q^{-k-l} F3^k K2^l F1.
        if (j > 0) out.add({j - 1, k + 1, l}, poly.scaled(q_int(field_, j)));
        f1_vacuum(poly, l, {j, k, 0}, q(j - k - l), out);
        return;
      default:
        throw Error("unexpected letter in basis action");
    }
  }

  F field_;
  T alpha_;
  T inv_diff_;
  T inv_diff2_;
};

}  // namespace uqsl3
