// Command-line front end: normal forms, module actions, Whittaker vectors,
// criticality, composition structure and the verification suites.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

#include <CLI11.hpp>

#include <gmpxx.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "uqsl3/center.hpp"
#include "uqsl3/expr.hpp"
#include "uqsl3/report.hpp"
#include "uqsl3/structure.hpp"
#include "uqsl3/suites.hpp"

namespace {

using namespace uqsl3;

struct FieldOptions {
  std::string q0;
  std::string alpha0;
  bool json = false;
};

struct Options {
  FieldOptions field;
  std::string expr;
  std::vector<std::string> act_args;
  std::string kappa;
  std::string c;
  int l = 0;
  int degree = 1;
  int n_max = 50;
  std::vector<std::string> suites;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string& name, const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw UsageError("--" + name + " expects a rational number, got '" + text + "'");
  v.canonicalize();
  return v;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <CoefficientField F>
class Commands {
 public:
  using T = typename F::value_type;

  Commands(F field, const Options& opt) : field_(field), alg_(field), mod_(field), opt_(opt) {}

  int nf() {
    ExprEvaluator<F> ev(alg_, mod_);
    const auto value = ev.eval(parse_expr(opt_.expr));
    const std::string text = render_value(value);
    if (opt_.field.json) {
      print(Json{{"input", opt_.expr}, {"field", field_.name()}, {"result", text}});
    } else {
      std::cout << text << "\n";
    }
    return 0;
  }

  int act() {
    if (opt_.act_args.size() != 3 || opt_.act_args[1] != "on") throw UsageError("usage: act EXPR on VECTOR");
    ExprEvaluator<F> ev(alg_, mod_);
    const auto a = ev.eval(parse_expr(opt_.act_args[0]));
    const auto m = ev.eval(parse_expr(opt_.act_args[2]));
    const auto* vec = std::get_if<ModuleElement<T>>(&m);
    if (vec == nullptr) throw UsageError("the second expression must be a vector (end in v)");
    ModuleElement<T> r;
    if (const auto* s = std::get_if<T>(&a)) {
      r = vec->scaled(*s);
    } else if (const auto* e = std::get_if<AlgebraElement<T>>(&a)) {
      r = mod_.act(*e, *vec);
    } else {
      throw UsageError("the first expression must be an element of U");
    }
    const bool reduce = !opt_.kappa.empty() || !opt_.c.empty();
    Json j{{"field", field_.name()}};
    if (reduce) {
      const auto [kappa, c] = parameters();
      r = mod_.reduce(r, IdealSpec<T>::maximal(kappa, c));
      j["kappa"] = field_.render(kappa);
      j["c"] = field_.render(c);
    }
    j["result"] = render(field_, r);
    if (opt_.field.json) {
      print(j);
    } else {
      std::cout << render(field_, r) << "\n";
    }
    return 0;
  }

  int vectors() {
    const auto [kappa, c] = parameters();
    const StructureAnalyzer<F> an(mod_);
    const auto basis = an.solve_whittaker_vectors(kappa, c, opt_.l, opt_.degree);
    Json j = vectors_json(field_, basis);
    j["kappa"] = field_.render(kappa);
    j["c"] = field_.render(c);
    j["l"] = opt_.l;
    j["window"] = opt_.degree;
    j["field"] = field_.name();
    if (opt_.field.json) {
      print(j);
    } else {
      std::cout << "dimension " << basis.size() << "\n";
      for (const auto& w : basis) std::cout << "  " << render(field_, w) << "\n";
    }
    return 0;
  }

  int criticality() {
    const auto [kappa, c] = parameters();
    const StructureAnalyzer<F> an(mod_);
    const auto r = an.criticality(kappa, c, opt_.n_max);
    if (opt_.field.json) {
      Json j = to_json(field_, r);
      j["field"] = field_.name();
      print(j);
      return 0;
    }
    std::cout << (r.critical ? "critical" : "non-critical") << "\n";
    std::cout << "roots " << join(r.roots) << " (scan bound " << r.scan_bound << ", "
              << (r.complete ? "complete" : "incomplete") << ")\n";
    if (r.minus) print_root("minus", *r.minus);
    if (r.plus) print_root("plus", *r.plus);
    return 0;
  }

  int structure() {
    const auto [kappa, c] = parameters();
    const StructureAnalyzer<F> an(mod_);
    const auto comp = an.composition_report(kappa, c, opt_.n_max);
    const auto center = center_elements(alg_);
    std::vector<std::pair<std::string, CasimirCheck<T>>> checks;
    checks.emplace_back("v", casimir_eigen_check(mod_, center, an.v_bar(0), kappa, c, kappa, c));
    for (const auto& layer : comp.layers) {
      checks.emplace_back("u(" + std::to_string(layer.root.n) + ",0,1)",
                          casimir_eigen_check(mod_, center, layer.generator, kappa, c, layer.root.kappa, layer.root.c));
    }
    bool passed = true;
    for (const auto& [name, chk] : checks) passed = passed && chk.passed();
    if (opt_.field.json) {
      Json casimir = Json::object();
      for (const auto& [name, chk] : checks) casimir[name] = to_json(field_, chk);
      print(Json{{"field", field_.name()},
                 {"kappa", field_.render(kappa)},
                 {"c", field_.render(c)},
                 {"composition", to_json(field_, comp)},
                 {"casimir", casimir},
                 {"passed", passed}});
    } else {
      std::cout << kind_name(comp.kind) << "\n";
      for (const auto& layer : comp.layers) {
        std::cout << "  layer n=" << layer.root.n << " kappa=" << field_.render(layer.root.kappa)
                  << " c=" << field_.render(layer.root.c) << " roots " << join(layer.layer_roots) << "\n";
        std::cout << "    generator " << render(field_, layer.generator) << "\n";
      }
      for (const auto& [name, chk] : checks) {
        std::cout << "  center on " << name << ": " << (chk.passed() ? "ok" : "FAILED") << " (ab = " << field_.render(chk.ab)
                  << ")\n";
        if (chk.derived_t2) std::cout << "    derived t^2 coefficient " << field_.render(*chk.derived_t2) << "\n";
      }
    }
    return passed ? 0 : 1;
  }

  int verify() {
    std::vector<std::string> names = opt_.suites.empty() ? suite_names() : opt_.suites;
    for (const auto& n : names) {
      if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) {
        throw UsageError("unknown suite '" + n + "'");
      }
    }
    SuiteRunner<F> runner(field_);
    runner.set_scan_bound(opt_.n_max);
    bool passed = true;
    Json suites = Json::array();
    for (const auto& n : names) {
      const SuiteResult r = runner.run(n);
      passed = passed && r.passed();
      if (opt_.field.json) {
        suites.push_back(to_json(r));
        continue;
      }
      int good = 0;
      for (const auto& c : r.checks) good += c.passed ? 1 : 0;
      std::cout << (r.passed() ? "PASS " : "FAIL ") << n << " (" << good << "/" << r.checks.size() << " checks)\n";
      for (const auto& c : r.checks) {
        if (!c.passed) std::cout << "  failed: " << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
      }
      for (const auto& [k, v] : r.notes) std::cout << "  " << k << ": " << v << "\n";
    }
    if (opt_.field.json) print(Json{{"field", field_.name()}, {"passed", passed}, {"suites", suites}});
    return passed ? 0 : 1;
  }

 private:
  std::pair<T, T> parameters() {
    if (opt_.kappa.empty() || opt_.c.empty()) throw UsageError("--kappa and --c are both required");
    ExprEvaluator<F> ev(alg_, mod_);
    const T kappa = ev.eval_scalar(parse_expr(opt_.kappa));
    const T c = ev.eval_scalar(parse_expr(opt_.c));
    if (kappa.is_zero()) throw DomainError("kappa must be nonzero");
    return {kappa, c};
  }

  std::string render_value(const ExprValue<T>& v) const {
    if (const auto* s = std::get_if<T>(&v)) return field_.render(*s);
    if (const auto* a = std::get_if<AlgebraElement<T>>(&v)) return render(field_, *a);
    return render(field_, std::get<ModuleElement<T>>(v));
  }

  void print_root(const char* which, const RootData<T>& r) const {
    std::cout << which << ": n=" << r.n << " kappa=" << field_.render(r.kappa) << " c=" << field_.render(r.c) << "\n";
  }

  static std::string join(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + "}";
  }

  F field_;
  Algebra<F> alg_;
  WhittakerModule<F> mod_;
  const Options& opt_;
};

template <CoefficientField F>
int dispatch(F field, const Options& opt, const std::string& command) {
  Commands<F> cmd(field, opt);
  if (command == "nf") return cmd.nf();
  if (command == "act") return cmd.act();
  if (command == "vectors") return cmd.vectors();
  if (command == "criticality") return cmd.criticality();
  if (command == "structure") return cmd.structure();
  return cmd.verify();
}

void add_field_options(CLI::App* sub, Options& opt) {
  sub->add_option("--q", opt.field.q0, "Evaluate at q = Q0 (rational) instead of symbolically");
  sub->add_option("--alpha", opt.field.alpha0, "Value of alpha when --q is given (default 1)");
  sub->add_flag("--json", opt.field.json, "Print a JSON report");
}

void add_parameters(CLI::App* sub, Options& opt, bool required) {
  auto* k = sub->add_option("--kappa", opt.kappa, "Eigenvalue of K, a scalar expression");
  auto* c = sub->add_option("--c", opt.c, "Eigenvalue of C1, a scalar expression");
  if (required) {
    k->required();
    c->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum sl3 Whittaker module toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
  nf->add_option("expr", opt.expr, "Expression")->required();
  add_field_options(nf, opt);

  auto* act = app.add_subcommand("act", "Act on a vector: act EXPR on VECTOR");
  act->add_option("args", opt.act_args, "EXPR on VECTOR")->required()->expected(3);
  add_parameters(act, opt, false);
  add_field_options(act, opt);

  auto* vectors = app.add_subcommand("vectors", "Whittaker vectors of V(eta; kappa, c) in a window");
  add_parameters(vectors, opt, true);
  vectors->add_option("--l", opt.l, "Type alpha q^l of the vectors");
  vectors->add_option("--degree", opt.degree, "Window size N")->check(CLI::PositiveNumber);
  add_field_options(vectors, opt);

  auto* crit = app.add_subcommand("criticality", "Roots of the critical polynomials at (kappa, c)");
  add_parameters(crit, opt, true);
  crit->add_option("--nmax", opt.n_max, "Scan bound")->check(CLI::PositiveNumber);
  add_field_options(crit, opt);

  auto* structure = app.add_subcommand("structure", "Composition series and center eigenvalues");
  add_parameters(structure, opt, true);
  structure->add_option("--nmax", opt.n_max, "Scan bound")->check(CLI::PositiveNumber);
  add_field_options(structure, opt);

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", opt.suites, "Suite to run (repeatable); default all");
  verify->add_option("--nmax", opt.n_max, "Scan bound for criticality")->check(CLI::PositiveNumber);
  add_field_options(verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (opt.field.q0.empty()) {
      if (!opt.field.alpha0.empty()) throw UsageError("--alpha needs --q");
      return dispatch(SymbolicField{}, opt, command);
    }
    const mpq_class q0 = parse_rational("q", opt.field.q0);
    const mpq_class a0 = opt.field.alpha0.empty() ? mpq_class(1) : parse_rational("alpha", opt.field.alpha0);
    return dispatch(EvaluatedField{EvalPoint(q0, a0)}, opt, command);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
