#pragma once

/**
 * @file relations.hpp
 * @brief Defining relations and root-vector identities as lists of words.
 *
 * Each relation is written as LHS - RHS, so it holds when its normal form is 0.
 */

#include <string>
#include <utility>
#include <vector>

#include "uqsl3/pbw.hpp"

namespace uqsl3 {

struct NamedRelation {
  std::string name;
  std::vector<RuleTerm> terms;
};

inline std::vector<NamedRelation> defining_relations() {
  using L = Letter;
  const Scalar q = Scalar::q();
  const Scalar qi = q.inverse();
  const Scalar bracket = (q - qi).inverse();
  const L e[2] = {L::E1, L::E2};
  const L f[2] = {L::F1, L::F2};
  const L k[2] = {L::K1, L::K2};
  const L kinv[2] = {L::K1inv, L::K2inv};
  const char* digit[2] = {"1", "2"};
  std::vector<NamedRelation> out;
  for (int i = 0; i < 2; ++i) {
    const std::string ki = std::string("K") + digit[i];
    out.push_back({ki + " " + ki + "^-1 = 1", {{1, {k[i], kinv[i]}}, {-1, {}}}});
    out.push_back({ki + "^-1 " + ki + " = 1", {{1, {kinv[i], k[i]}}, {-1, {}}}});
  }
  out.push_back({"K1 K2 = K2 K1", {{1, {L::K1, L::K2}}, {-1, {L::K2, L::K1}}}});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int a = i == j ? 2 : -1;
      const std::string ki = std::string("K") + digit[i];
      const std::string ej = std::string("E") + digit[j];
      const std::string fj = std::string("F") + digit[j];
      out.push_back({ki + " " + ej + " " + ki + "^-1 = q^" + std::to_string(a) + " " + ej,
                     {{1, {k[i], e[j], kinv[i]}}, {-Scalar::q_power(a), {e[j]}}}});
      out.push_back({ki + " " + fj + " " + ki + "^-1 = q^" + std::to_string(-a) + " " + fj,
                     {{1, {k[i], f[j], kinv[i]}}, {-Scalar::q_power(-a), {f[j]}}}});
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<RuleTerm> t{{1, {e[i], f[j]}}, {-1, {f[j], e[i]}}};
      if (i == j) {
        t.push_back({-bracket, {k[i]}});
        t.push_back({bracket, {kinv[i]}});
      }
      out.push_back({std::string("[E") + digit[i] + ", F" + digit[j] + "]", t});
    }
  }
  const Scalar two = q + qi;
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    out.push_back({std::string("Serre E") + digit[i] + "^2 E" + digit[j],
                   {{1, {e[i], e[i], e[j]}}, {-two, {e[i], e[j], e[i]}}, {1, {e[j], e[i], e[i]}}}});
    out.push_back({std::string("Serre F") + digit[i] + "^2 F" + digit[j],
                   {{1, {f[i], f[i], f[j]}}, {-two, {f[i], f[j], f[i]}}, {1, {f[j], f[i], f[i]}}}});
  }
  return out;
}

/// Commutation of E3, F3 with the Chevalley generators.
inline std::vector<NamedRelation> root_vector_identities() {
  using L = Letter;
  const Scalar q = Scalar::q();
  const Scalar qi = q.inverse();
  return {
      {"K1 E3 = q E3 K1", {{1, {L::K1, L::E3}}, {-q, {L::E3, L::K1}}}},
      {"K2 E3 = q E3 K2", {{1, {L::K2, L::E3}}, {-q, {L::E3, L::K2}}}},
      {"K1 F3 = q^-1 F3 K1", {{1, {L::K1, L::F3}}, {-qi, {L::F3, L::K1}}}},
      {"K2 F3 = q^-1 F3 K2", {{1, {L::K2, L::F3}}, {-qi, {L::F3, L::K2}}}},
      {"F1 F3 = q^-1 F3 F1", {{1, {L::F1, L::F3}}, {-qi, {L::F3, L::F1}}}},
      {"F2 F3 = q F3 F2", {{1, {L::F2, L::F3}}, {-q, {L::F3, L::F2}}}},
      {"[E1, F3] = F2 K1^-1", {{1, {L::E1, L::F3}}, {-1, {L::F3, L::E1}}, {-1, {L::F2, L::K1inv}}}},
      {"[E2, F3] = -K2 F1", {{1, {L::E2, L::F3}}, {-1, {L::F3, L::E2}}, {1, {L::K2, L::F1}}}},
      {"E1 E3 = q E3 E1", {{1, {L::E1, L::E3}}, {-q, {L::E3, L::E1}}}},
      {"E2 E3 = q^-1 E3 E2", {{1, {L::E2, L::E3}}, {-qi, {L::E3, L::E2}}}},
      {"[F1, E3] = E2 K1^-1", {{1, {L::F1, L::E3}}, {-1, {L::E3, L::F1}}, {-1, {L::E2, L::K1inv}}}},
      {"[F2, E3] = -K2 E1", {{1, {L::F2, L::E3}}, {-1, {L::E3, L::F2}}, {1, {L::K2, L::E1}}}},
  };
}

/// The same combination with every E3 and F3 replaced by its Chevalley expansion.
inline std::vector<RuleTerm> expand_root_vectors(const std::vector<RuleTerm>& terms) {
  std::vector<RuleTerm> result;
  for (const auto& t : terms) {
    std::vector<RuleTerm> partial{{t.coeff, {}}};
    for (Letter x : t.word) {
      std::vector<RuleTerm> pieces;
      if (x == Letter::E3) {
        pieces = detail::e3_expansion();
      } else if (x == Letter::F3) {
        pieces = detail::f3_expansion();
      } else {
        pieces = {{1, {x}}};
      }
      std::vector<RuleTerm> next;
      for (const auto& p : partial) {
        for (const auto& piece : pieces) {
          Word w = p.word;
          w.insert(w.end(), piece.word.begin(), piece.word.end());
          next.push_back({p.coeff * piece.coeff, std::move(w)});
        }
      }
      partial = std::move(next);
    }
    result.insert(result.end(), partial.begin(), partial.end());
  }
  return result;
}

}  // namespace uqsl3
