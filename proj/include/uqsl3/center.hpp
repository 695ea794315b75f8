#pragma once

/**
 * @file center.hpp
 * @brief Generators of the center and their action on Whittaker vectors.
 *
 * Z1 = X1 X2, Z2 = X1^3 K and Z3 = X2^3 K^-1 generate the center. On a
 * Whittaker vector of V(eta; kappa, c) they act by AB, kappa A^3 and
 * kappa^-1 B^3 with A = (q-q^-1)^2 c + q^-3 kappa^-1, B = (q-q^-1)^2 c + q^3 kappa,
 * and kappa is then a root of a sextic whose coefficients are built from those
 * three eigenvalues.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqsl3/field.hpp"
#include "uqsl3/pbw.hpp"
#include "uqsl3/structure.hpp"
#include "uqsl3/whittaker.hpp"

namespace uqsl3 {

template <class T>
struct CenterElements {
  AlgebraElement<T> x1;
  AlgebraElement<T> x2;
  AlgebraElement<T> z1;
  AlgebraElement<T> z2;
  AlgebraElement<T> z3;
};

template <CoefficientField F>
CenterElements<typename F::value_type> center_elements(Algebra<F>& alg) {
  using T = typename F::value_type;
  using L = Letter;
  const F& f = alg.field();
  auto q = [&f](int n) { return f.q_power(n); };
  const T d2 = q_diff_power(f, 2);

  AlgebraElement<T> x1 = alg.k_power(-1).scaled(q(-3));
  x1.add_scaled(alg.generator(L::K1), q(1));
  x1.add_scaled(alg.generator(L::K1inv), q(-1));
  x1.add_scaled(alg.from_word({L::F1, L::E1}), d2);
  x1.add_scaled(alg.from_word({L::F2, L::E2, L::K1inv, L::K2inv}), d2 * q(-2));
  x1.add_scaled(alg.from_word({L::F3, L::E3, L::K2inv}), -d2 * q(-1));

  // q F~3 E~3 K2 with F~3 = F2 F1 - q F1 F2 and E~3 = E2 E1 - q^-1 E1 E2.
  AlgebraElement<T> tilde = alg.from_word({L::F2, L::F1, L::E2, L::E1, L::K2});
  tilde.add_scaled(alg.from_word({L::F2, L::F1, L::E1, L::E2, L::K2}), -q(-1));
  tilde.add_scaled(alg.from_word({L::F1, L::F2, L::E2, L::E1, L::K2}), -q(1));
  tilde.add_scaled(alg.from_word({L::F1, L::F2, L::E1, L::E2, L::K2}), T(1));

  AlgebraElement<T> x2 = alg.k_power(1).scaled(q(3));
  x2.add_scaled(alg.generator(L::K1), q(1));
  x2.add_scaled(alg.generator(L::K1inv), q(-1));
  x2.add_scaled(alg.from_word({L::F1, L::E1}), d2);
  x2.add_scaled(alg.from_word({L::F2, L::E2, L::K1, L::K2}), d2 * q(2));
  x2.add_scaled(tilde, -d2 * q(1));

  CenterElements<T> c{x1, x2, alg.multiply(x1, x2), {}, {}};
  c.z2 = alg.multiply(alg.power(x1, 3), alg.k_power(1));
  c.z3 = alg.multiply(alg.power(x2, 3), alg.k_power(-1));
  return c;
}

/// Letters the centrality check runs over.
inline const std::vector<Letter>& centrality_letters() {
  static const std::vector<Letter> letters{Letter::E1, Letter::E2, Letter::F1,    Letter::F2,
                                           Letter::K1, Letter::K1inv, Letter::K2, Letter::K2inv};
  return letters;
}

struct CentralityResult {
  std::string element;
  Letter generator;
  bool vanishes;
  std::size_t terms;
};

/// [Z_i, x] for the three generators of the center and the eight letters.
template <CoefficientField F>
std::vector<CentralityResult> centrality_checks(Algebra<F>& alg, const CenterElements<typename F::value_type>& c) {
  std::vector<CentralityResult> out;
  const std::pair<const char*, const AlgebraElement<typename F::value_type>*> zs[] = {
      {"Z1", &c.z1}, {"Z2", &c.z2}, {"Z3", &c.z3}};
  for (const auto& [name, z] : zs) {
    for (Letter x : centrality_letters()) {
      const auto comm = alg.commutator(*z, alg.generator(x));
      out.push_back({name, x, comm.is_zero(), comm.size()});
    }
  }
  return out;
}

template <class T>
struct CasimirCheck {
  T ab;
  T a3;
  T b3;
  bool z1 = false;
  bool z2 = false;
  bool z3 = false;
  /// Value of the sextic at t = kappa with the displayed coefficients.
  T sextic_value;
  bool sextic_holds = false;
  /// (q^3 a^3 + 3 - 3ab) q^6, the displayed t^2 coefficient.
  T displayed_t2;
  /// The t^2 coefficient that makes kappa a root; only set when the displayed one fails.
  std::optional<T> derived_t2;

  bool passed() const { return z1 && z2 && z3 && sextic_holds; }
};

/// Eigenvalue checks for the center on a Whittaker vector w of V(eta; kappa, c)
/// whose K and C1 eigenvalues are (ek, ec).
template <CoefficientField F>
CasimirCheck<typename F::value_type> casimir_eigen_check(const WhittakerModule<F>& mod,
                                                         const CenterElements<typename F::value_type>& center,
                                                         const ModuleElement<typename F::value_type>& w,
                                                         const typename F::value_type& kappa,
                                                         const typename F::value_type& c,
                                                         const typename F::value_type& ek,
                                                         const typename F::value_type& ec) {
  using T = typename F::value_type;
  if (kappa.is_zero() || ek.is_zero()) throw DomainError("kappa must be nonzero");
  auto q = [&mod](int n) { return mod.q(n); };
  const T d2 = T(1) / mod.inv_diff2();
  const T a = d2 * ec + q(-3) / ek;
  const T b = d2 * ec + q(3) * ek;
  CasimirCheck<T> r;
  r.ab = a * b;
  r.a3 = ek * a.pow(3);
  r.b3 = b.pow(3) / ek;

  const IdealSpec<T> ideal = IdealSpec<T>::maximal(kappa, c);
  auto acts_by = [&](const AlgebraElement<T>& z, const T& lambda) {
    return mod.reduce(mod.act(z, w), ideal) == w.scaled(lambda);
  };
  r.z1 = acts_by(center.z1, r.ab);
  r.z2 = acts_by(center.z2, r.a3);
  r.z3 = acts_by(center.z3, r.b3);

  const T t2 = ek * ek;
  const T t4 = t2 * t2;
  const T top = q(18) * t4 * t2 + (T(3) * r.ab - T(3) - q(-3) * r.b3) * q(12) * t4;
  r.displayed_t2 = (q(3) * r.a3 + T(3) - T(3) * r.ab) * q(6);
  r.sextic_value = top + r.displayed_t2 * t2 - T(1);
  r.sextic_holds = r.sextic_value.is_zero();
  if (!r.sextic_holds) r.derived_t2 = (T(1) - top) / t2;
  return r;
}

}  // namespace uqsl3
