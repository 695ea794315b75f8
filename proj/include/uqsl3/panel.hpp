#pragma once

/**
 * @file panel.hpp
 * @brief Parameter pairs (kappa, c) used by the verification suites.
 *
 * Critical pairs are built from h_n(kappa, c) = 0: for roots n- < n+ the
 * pair is kappa = q^{n- + n+ - 3}, c = (q^{3-2n} kappa + q^{2n-3} kappa^-1)/(q-q^-1)^2
 * at either root; a single root n needs kappa^2 outside the even powers of q.
 */

#include <string>
#include <vector>

#include "uqsl3/scalar.hpp"

namespace uqsl3 {

struct PanelPoint {
  std::string name;
  Scalar kappa;
  Scalar c;
  /// Roots of h_n(kappa, c), known from the construction.
  std::vector<int> roots;
};

/// c with h_n(kappa, c) = 0.
inline Scalar critical_c(int n, const Scalar& kappa) {
  const Scalar d = Scalar::q() - Scalar::q_power(-1);
  return (Scalar::q_power(3 - 2 * n) * kappa + Scalar::q_power(2 * n - 3) / kappa) / (d * d);
}

inline const std::vector<PanelPoint>& reference_panel() {
  static const std::vector<PanelPoint> panel = [] {
    const Scalar q = Scalar::q();
    const Scalar a = Scalar::alpha();
    return std::vector<PanelPoint>{
        {"generic", Scalar(1), Scalar(0), {}},
        {"generic-q", q, Scalar(1), {}},
        {"roots-1-2", Scalar(1), critical_c(1, Scalar(1)), {1, 2}},
        {"roots-1-3", q, critical_c(1, q), {1, 3}},
        {"root-1", Scalar(2), critical_c(1, Scalar(2)), {1}},
        {"root-1-alpha", Scalar(3) * a, critical_c(1, Scalar(3) * a), {1}},
    };
  }();
  return panel;
}

}  // namespace uqsl3
