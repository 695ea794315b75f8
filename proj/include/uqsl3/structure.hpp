#pragma once

/**
 * @file structure.hpp
 * @brief Criticality, Whittaker vectors, submodules and central elements.
 *
 * Everything here works in the quotients V(eta; kappa, c) of the universal
 * module, represented by ModuleElements whose coefficients are constants.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqsl3/errors.hpp"
#include "uqsl3/field.hpp"
#include "uqsl3/linear_solve.hpp"
#include "uqsl3/pbw.hpp"
#include "uqsl3/whittaker.hpp"

namespace uqsl3 {

/// Exponent m with x = q^m, if there is one.
template <CoefficientField F>
std::optional<int> q_exponent(const F& field, const typename F::value_type& x) {
  if (x.is_zero()) return std::nullopt;
  if constexpr (std::same_as<F, SymbolicField>) {
    const Poly& n = x.numerator();
    const Poly& d = x.denominator();
    if (!n.is_monomial() || !d.is_monomial()) return std::nullopt;
    if (n.leading().coeff != 1 || d.leading().coeff != 1) return std::nullopt;
    if (n.leading().mono.a != 0 || d.leading().mono.a != 0) return std::nullopt;
    return n.leading().mono.q - d.leading().mono.q;
  } else {
    // Walk powers of q0 outward until their size passes |x|.
    const mpq_class target = abs(x.value());
    const mpq_class q0 = field.point.q0;
    const int step = abs(q0) > 1 ? (target >= 1 ? 1 : -1) : (target >= 1 ? -1 : 1);
    for (int m = 0;; m += step) {
      const mpq_class p = rational_power(q0, m);
      if (p == x.value()) return m;
      if (abs(p) > target && target >= 1) return std::nullopt;
      if (abs(p) < target && target < 1) return std::nullopt;
    }
  }
}

/// Parameters of the submodule generated by the Whittaker vector for root n.
template <class T>
struct RootData {
  int n = 0;
  T kappa;
  T c;
};

template <class T>
struct CriticalityReport {
  bool critical = false;
  std::vector<int> roots;
  std::optional<RootData<T>> minus;
  std::optional<RootData<T>> plus;
  /// n with J(kappa, c) + (h_n) the whole ring, i.e. h_n(kappa, c) = 0.
  std::vector<int> hat_enlarged;
  int scan_bound = 0;
  /// True when no root beyond scan_bound is possible.
  bool complete = false;

  std::optional<int> n_minus() const { return roots.empty() ? std::nullopt : std::optional<int>(roots.front()); }
  std::optional<int> n_plus() const { return roots.empty() ? std::nullopt : std::optional<int>(roots.back()); }
};

enum class CompositionKind { Irreducible, UniqueProper, TwoStep };

inline std::string kind_name(CompositionKind k) {
  switch (k) {
    case CompositionKind::Irreducible:
      return "irreducible";
    case CompositionKind::UniqueProper:
      return "unique_proper";
    case CompositionKind::TwoStep:
      return "two_step";
  }
  return "";
}

/// The submodule generated by u_bar(n, 0, 1), isomorphic to V(eta; kappa, c) of the root.
template <class T>
struct CompositionLayer {
  RootData<T> root;
  ModuleElement<T> generator;
  /// Critical roots of the layer's own parameters.
  std::vector<int> layer_roots;
};

template <class T>
struct CompositionReport {
  CompositionKind kind = CompositionKind::Irreducible;
  /// Smallest submodule first: the n_+ layer, then the n_- layer when distinct.
  std::vector<CompositionLayer<T>> layers;
  CriticalityReport<T> criticality;
};

template <CoefficientField F>
class StructureAnalyzer {
 public:
  using T = typename F::value_type;
  using Element = ModuleElement<T>;
  using Poly = CoeffPoly<T>;

  explicit StructureAnalyzer(WhittakerModule<F> module) : module_(std::move(module)) {}

  const WhittakerModule<F>& module() const { return module_; }
  const F& field() const { return module_.field(); }
  T q(int n) const { return module_.q(n); }

  /// h_n(kappa, c) from its closed form.
  T h_value(int n, const T& kappa, const T& c) const {
    return q(3 - 2 * n) * kappa + q(2 * n - 3) / kappa - c / module_.inv_diff2();
  }

  /// kappa_n = q^{-3n} kappa and c_n = (q^{n-3} kappa^-1 + q^{3-n} kappa) / (q - q^-1)^2.
  RootData<T> root_data(int n, const T& kappa) const {
    return {n, q(-3 * n) * kappa, (q(n - 3) / kappa + q(3 - n) * kappa) * module_.inv_diff2()};
  }

  CriticalityReport<T> criticality(const T& kappa, const T& c, int n_max = 50) const {
    if (kappa.is_zero()) throw DomainError("kappa must be nonzero");
    if (n_max < 1) throw DomainError("n_max must be positive");
    CriticalityReport<T> r;
    r.scan_bound = n_max;
    for (int n = 1; n <= n_max; ++n) {
      if (h_value(n, kappa, c).is_zero()) r.roots.push_back(n);
      if (module_.h_poly(n).substitute(kappa, c).is_zero()) r.hat_enlarged.push_back(n);
    }
    if (r.roots.size() > 2) throw Error("more than two roots of the critical polynomials");
    r.critical = !r.roots.empty();
    if (r.critical) {
      r.minus = root_data(r.roots.front(), kappa);
      r.plus = root_data(r.roots.back(), kappa);
    }
    r.complete = scan_is_complete(kappa, c, r);
    return r;
  }

  /// Image of u(n, l, 1) in V(eta; kappa, c).
  Element u_bar(int n, int l, const T& kappa, const T& c) const {
    return module_.reduce(module_.u_element(n, l, Poly::one()), IdealSpec<T>::maximal(kappa, c));
  }

  Element v_bar(int l = 0) const { return Element::basis({0, 0, l}, Poly::one()); }

  /// (E1 - alpha q^l) w and E2 w in V(eta; kappa, c).
  std::pair<Element, Element> whittaker_defects(const Element& w, int l, const T& kappa, const T& c) const {
    const IdealSpec<T> ideal = IdealSpec<T>::maximal(kappa, c);
    Element e1 = module_.act(Letter::E1, w);
    e1.add_scaled(w, -module_.alpha() * q(l));
    return {module_.reduce(e1, ideal), module_.reduce(module_.act(Letter::E2, w), ideal)};
  }

  bool is_whittaker_vector(const Element& w, int l, const T& kappa, const T& c) const {
    const auto [a, b] = whittaker_defects(w, l, kappa, c);
    return a.is_zero() && b.is_zero();
  }

  /// Basis of the Whittaker vectors of type (alpha q^l, 0) in V(eta; kappa, c)
  /// supported on j + k <= N, l <= l' <= l + 2N.
  std::vector<Element> solve_whittaker_vectors(const T& kappa, const T& c, int l, int N) const {
    if (kappa.is_zero()) throw DomainError("kappa must be nonzero");
    if (N < 1) throw DomainError("window size must be positive");
    std::vector<BasisIndex> window;
    for (int s = 0; s <= N; ++s) {
      for (int k = 0; k <= s; ++k) {
        for (int lp = l; lp <= l + 2 * N; ++lp) window.push_back({s - k, k, lp});
      }
    }
    // Row key: (equation, coordinate); column: window position.
    std::map<std::pair<int, BasisIndex>, SparseRow<T>> rows;
    for (std::size_t i = 0; i < window.size(); ++i) {
      const auto [e1, e2] = whittaker_defects(Element::basis(window[i], Poly::one()), l, kappa, c);
      for (const auto& [idx, p] : e1.terms()) rows[{0, idx}][static_cast<int>(i)] = p.constant_term();
      for (const auto& [idx, p] : e2.terms()) rows[{1, idx}][static_cast<int>(i)] = p.constant_term();
    }
    RowEchelon<T> ech(static_cast<int>(window.size()));
    for (auto& [key, row] : rows) ech.add_row(std::move(row));
    std::vector<Element> basis;
    for (const auto& x : ech.nullspace()) {
      Element w;
      for (std::size_t i = 0; i < window.size(); ++i) {
        if (!x[i].is_zero()) w.add(window[i], Poly::constant(x[i]));
      }
      basis.push_back(std::move(w));
    }
    return basis;
  }

  /// Whether w lies in the span of F2^a F3^b K2^e u_bar(n, 0, 1), |indices| <= bound.
  /// Each spanning vector has leading index (a, n + b, e), so elimination by
  /// leading term decides membership.
  bool submodule_membership(Element w, int n, const T& kappa, const T& c, int bound) const {
    if (kappa.is_zero()) throw DomainError("kappa must be nonzero");
    const Element u = u_bar(n, 0, kappa, c);
    std::map<BasisIndex, Element> span;
    while (!w.is_zero()) {
      const BasisIndex d = w.degree();
      if (d.k < n) return false;
      const BasisIndex at{d.j, d.k - n, d.l};
      if (at.j > bound || at.k > bound || std::abs(at.l) > bound) {
        throw Inconclusive("membership needs spanning index (" + std::to_string(at.j) + "," + std::to_string(at.k) +
                           "," + std::to_string(at.l) + ") beyond bound " + std::to_string(bound));
      }
      auto it = span.find(at);
      if (it == span.end()) it = span.emplace(at, spanning_vector(u, at)).first;
      const Element& s = it->second;
      if (!(s.degree() == d)) throw Error("spanning vector has an unexpected leading index");
      const T factor = w.coefficient(d).constant_term() / s.coefficient(d).constant_term();
      w.add_scaled(s, -factor);
    }
    return true;
  }

  CompositionReport<T> composition_report(const T& kappa, const T& c, int n_max = 50) const {
    CompositionReport<T> r;
    r.criticality = criticality(kappa, c, n_max);
    const auto& roots = r.criticality.roots;
    if (roots.empty()) return r;
    r.kind = roots.size() == 1 ? CompositionKind::UniqueProper : CompositionKind::TwoStep;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
      CompositionLayer<T> layer{root_data(*it, kappa), u_bar(*it, 0, kappa, c), {}};
      layer.layer_roots = criticality(layer.root.kappa, layer.root.c, n_max).roots;
      r.layers.push_back(std::move(layer));
    }
    return r;
  }

 private:
  Element spanning_vector(const Element& u, const BasisIndex& at) const {
    Element s = u;
    const Letter k2 = at.l >= 0 ? Letter::K2 : Letter::K2inv;
    for (int i = 0; i < std::abs(at.l); ++i) s = module_.act(k2, s);
    for (int i = 0; i < at.k; ++i) s = module_.act(Letter::F3, s);
    for (int i = 0; i < at.j; ++i) s = module_.act(Letter::F2, s);
    return s;
  }

  // Roots are n with x = q^{2n-3} solving x^2 - B x + kappa^2 = 0, B = (q-q^-1)^2 c kappa.
  // Two roots exhaust the quadratic; one root determines the other as kappa^2 / x;
  // with none, a size bound on the roots caps n.
  bool scan_is_complete(const T& kappa, const T& c, const CriticalityReport<T>& r) const {
    if (r.roots.size() == 2) return true;
    const T kappa2 = kappa * kappa;
    if (r.roots.size() == 1) {
      const auto m = q_exponent(field(), kappa2 / q(2 * r.roots.front() - 3));
      if (!m || *m % 2 == 0) return true;
      const int other = (*m + 3) / 2;
      return other <= r.scan_bound;
    }
    const T b = c / module_.inv_diff2() * kappa;
    return max_root_n(b, kappa2) <= r.scan_bound;
  }

  int max_root_n(const T& b, const T& kappa2) const {
    int m_max = 0;
    if constexpr (std::same_as<F, SymbolicField>) {
      // A root q^m with m > deg kappa forces m = deg B (degrees in q at infinity).
      auto deg = [](const Scalar& s) { return s.numerator().max_q() - s.denominator().max_q(); };
      const int dk2 = deg(kappa2);
      m_max = dk2 > 0 ? (dk2 + 1) / 2 : 0;
      if (!b.is_zero()) m_max = std::max(m_max, deg(b));
    } else {
      // Cauchy bound on |x| or on |1/x|, whichever grows with m.
      const mpq_class q0 = abs(field().point.q0);
      const mpq_class bb = abs(b.value());
      const mpq_class kk = abs(kappa2.value());
      const mpq_class cap = q0 > 1 ? 1 + std::max(bb, kk) : 1 + std::max(mpq_class(bb / kk), mpq_class(1 / kk));
      const mpq_class base = q0 > 1 ? q0 : mpq_class(1 / q0);
      mpq_class p = 1;
      while (p <= cap) {
        p *= base;
        ++m_max;
      }
    }
    return (m_max + 3) / 2 + 1;
  }

  WhittakerModule<F> module_;
};

}  // namespace uqsl3
