#pragma once

/**
 * @file report.hpp
 * @brief JSON forms of the analysis results.
 *
 * Scalars are rendered as strings in the text syntax. Object keys come out
 * sorted (nlohmann::json stores objects in std::map), so equal results give
 * byte-identical documents.
 */

#include <json.hpp>

#include <string>
#include <vector>

#include "uqsl3/center.hpp"
#include "uqsl3/structure.hpp"
#include "uqsl3/suites.hpp"
#include "uqsl3/whittaker.hpp"

namespace uqsl3 {

using Json = nlohmann::json;

template <class F, class T>
Json root_json(const F& field, const std::optional<RootData<T>>& r) {
  if (!r) return nullptr;
  return Json{{"n", r->n}, {"kappa", field.render(r->kappa)}, {"c", field.render(r->c)}};
}

template <class F, class T>
Json to_json(const F& field, const CriticalityReport<T>& r) {
  Json j;
  j["critical"] = r.critical;
  j["roots"] = r.roots;
  j["n_minus"] = r.n_minus() ? Json(*r.n_minus()) : Json(nullptr);
  j["n_plus"] = r.n_plus() ? Json(*r.n_plus()) : Json(nullptr);
  j["kappa_eps"] = Json{{"minus", r.minus ? Json(field.render(r.minus->kappa)) : Json(nullptr)},
                        {"plus", r.plus ? Json(field.render(r.plus->kappa)) : Json(nullptr)}};
  j["c_eps"] = Json{{"minus", r.minus ? Json(field.render(r.minus->c)) : Json(nullptr)},
                    {"plus", r.plus ? Json(field.render(r.plus->c)) : Json(nullptr)}};
  j["hat_enlarged"] = r.hat_enlarged;
  j["scan_bound"] = r.scan_bound;
  j["complete"] = r.complete;
  return j;
}

template <class F, class T>
Json to_json(const F& field, const CompositionReport<T>& r) {
  Json layers = Json::array();
  for (const auto& l : r.layers) {
    layers.push_back(Json{{"n", l.root.n},
                          {"kappa", field.render(l.root.kappa)},
                          {"c", field.render(l.root.c)},
                          {"generator", render(field, l.generator)},
                          {"layer_roots", l.layer_roots}});
  }
  return Json{{"type", kind_name(r.kind)}, {"layers", layers}, {"criticality", to_json(field, r.criticality)}};
}

template <class F, class T>
Json to_json(const F& field, const CasimirCheck<T>& r) {
  return Json{{"ab", field.render(r.ab)},
              {"a3", field.render(r.a3)},
              {"b3", field.render(r.b3)},
              {"z1", r.z1},
              {"z2", r.z2},
              {"z3", r.z3},
              {"sextic_value", field.render(r.sextic_value)},
              {"sextic_holds", r.sextic_holds},
              {"displayed_t2", field.render(r.displayed_t2)},
              {"derived_t2", r.derived_t2 ? Json(field.render(*r.derived_t2)) : Json(nullptr)},
              {"passed", r.passed()}};
}

inline Json to_json(const SuiteResult& s) {
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"name", s.name}, {"passed", s.passed()}, {"checks", checks}, {"notes", s.notes}};
}

template <class F, class T>
Json vectors_json(const F& field, const std::vector<ModuleElement<T>>& basis) {
  Json b = Json::array();
  for (const auto& w : basis) b.push_back(render(field, w));
  return Json{{"dimension", basis.size()}, {"basis", b}};
}

}  // namespace uqsl3
