#include <gtest/gtest.h>

#include "uqsl3/center.hpp"
#include "uqsl3/panel.hpp"
#include "uqsl3/structure.hpp"

namespace uqsl3 {
namespace {

using Poly = CoeffPoly<Scalar>;
using Vec = ModuleElement<Scalar>;
using Analyzer = StructureAnalyzer<SymbolicField>;
using EvalAnalyzer = StructureAnalyzer<EvaluatedField>;

const Scalar q = Scalar::q();
const Scalar d2 = (q - q.inverse()) * (q - q.inverse());

const Analyzer& analyzer() {
  static const Analyzer s{WhittakerModule<SymbolicField>{SymbolicField{}}};
  return s;
}

const EvaluatedField& eval_field() {
  static const EvaluatedField f{EvalPoint(2, 1)};
  return f;
}

const EvalAnalyzer& eval_analyzer() {
  static const EvalAnalyzer s{WhittakerModule<EvaluatedField>{eval_field()}};
  return s;
}

Algebra<SymbolicField>& algebra() {
  static Algebra<SymbolicField> u{SymbolicField{}};
  return u;
}

const CenterElements<Scalar>& center() {
  static const CenterElements<Scalar> c = center_elements(algebra());
  return c;
}

const PanelPoint& panel(const std::string& name) {
  for (const auto& p : reference_panel()) {
    if (p.name == name) return p;
  }
  throw std::out_of_range(name);
}

ModuleElement<Rational> lift(const Vec& m) {
  ModuleElement<Rational> r;
  for (const auto& [idx, p] : m.terms()) {
    CoeffPoly<Rational> lp;
    for (const auto& [key, v] : p.terms()) lp.add_term(key.first, key.second, eval_field().lift(v));
    r.add(idx, lp);
  }
  return r;
}

std::map<BasisIndex, Rational> coordinates(const ModuleElement<Rational>& m) {
  std::map<BasisIndex, Rational> r;
  for (const auto& [idx, p] : m.terms()) r.emplace(idx, p.constant_term());
  return r;
}

TEST(Criticality, CriticalPolynomials) {
  const auto& M = analyzer().module();
  Poly h1 = Poly::term(q, 1, 0);
  h1.add_term(-1, 0, q.inverse());
  h1.add_term(0, 1, -d2);
  EXPECT_EQ(M.h_poly(1), h1);
  Poly h2 = Poly::term(q.inverse(), 1, 0);
  h2.add_term(-1, 0, q);
  h2.add_term(0, 1, -d2);
  EXPECT_EQ(M.h_poly(2), h2);
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) EXPECT_FALSE((M.h_poly(n) - M.h_poly(m)).involves_c1());
  }
}

TEST(Criticality, ReferencePairs) {
  const auto& S = analyzer();
  const auto generic = S.criticality(Scalar(1), Scalar(0));
  EXPECT_FALSE(generic.critical);
  EXPECT_TRUE(generic.roots.empty());
  EXPECT_TRUE(generic.complete);
  EXPECT_EQ(generic.scan_bound, 50);

  const auto two = S.criticality(Scalar(1), (q + q.inverse()) / d2);
  EXPECT_TRUE(two.critical);
  EXPECT_EQ(two.roots, (std::vector<int>{1, 2}));
  EXPECT_EQ(two.n_minus(), 1);
  EXPECT_EQ(two.n_plus(), 2);
  ASSERT_TRUE(two.minus && two.plus);
  EXPECT_EQ(two.minus->kappa, Scalar::q_power(-3));
  EXPECT_EQ(two.minus->c, (q * q + Scalar::q_power(-2)) / d2);
  EXPECT_EQ(two.plus->kappa, Scalar::q_power(-6));
  EXPECT_EQ(two.hat_enlarged, two.roots);
  EXPECT_TRUE(two.complete);

  const auto one = S.criticality(Scalar(2), (Scalar(2) * q + q.inverse() / Scalar(2)) / d2);
  EXPECT_EQ(one.roots, (std::vector<int>{1}));
  EXPECT_EQ(one.n_minus(), one.n_plus());
  EXPECT_TRUE(one.complete);

  EXPECT_THROW(S.criticality(Scalar(0), Scalar(1)), DomainError);
}

TEST(Criticality, PanelRootsMatchConstruction) {
  for (const auto& p : reference_panel()) {
    const auto r = analyzer().criticality(p.kappa, p.c);
    EXPECT_EQ(r.roots, p.roots) << p.name;
    EXPECT_EQ(r.hat_enlarged, p.roots) << p.name;
    EXPECT_TRUE(r.complete) << p.name;
    if (r.roots.size() == 2) {
      const int e = r.roots[0] + r.roots[1] - 3;
      EXPECT_EQ(p.kappa * p.kappa, Scalar::q_power(2 * e)) << p.name;
    }
  }
}

TEST(Criticality, ScanCompletenessCertificate) {
  const auto& S = analyzer();
  EXPECT_FALSE(S.criticality(Scalar(1), Scalar(0), 1).complete);
  EXPECT_TRUE(S.criticality(Scalar(1), Scalar(0), 2).complete);
  const auto& p = panel("roots-1-3");
  const auto partial = S.criticality(p.kappa, p.c, 2);
  EXPECT_EQ(partial.roots, (std::vector<int>{1}));
  EXPECT_FALSE(partial.complete);
  EXPECT_TRUE(S.criticality(p.kappa, p.c, 3).complete);
  // A pair whose roots sit far out: kappa = q^37 has roots 20 and 20.
  const Scalar far = Scalar::q_power(37);
  const auto deep = S.criticality(far, critical_c(20, far), 10);
  EXPECT_TRUE(deep.roots.empty());
  EXPECT_FALSE(deep.complete);
  EXPECT_EQ(S.criticality(far, critical_c(20, far)).roots, (std::vector<int>{20}));
}

TEST(Criticality, EvaluatedFieldAgrees) {
  const EvaluatedField f{EvalPoint(3, 2)};
  const EvalAnalyzer E{WhittakerModule<EvaluatedField>{f}};
  for (const auto& p : reference_panel()) {
    const auto r = E.criticality(f.lift(p.kappa), f.lift(p.c));
    EXPECT_EQ(r.roots, p.roots) << p.name;
    EXPECT_TRUE(r.complete) << p.name;
  }
  EXPECT_FALSE(E.criticality(Rational(1), Rational(0), 1).complete);
}

TEST(Criticality, SpecializationCanAddRoots) {
  // kappa = 2 becomes q0 at q0 = 2, so h_3 vanishes there but not over Q(q).
  const auto& p = panel("root-1");
  const auto r = eval_analyzer().criticality(eval_field().lift(p.kappa), eval_field().lift(p.c));
  EXPECT_EQ(r.roots, (std::vector<int>{1, 3}));
}

TEST(Criticality, QExponent) {
  const SymbolicField sf;
  EXPECT_EQ(q_exponent(sf, Scalar::q_power(-5)), -5);
  EXPECT_EQ(q_exponent(sf, Scalar(1)), 0);
  EXPECT_EQ(q_exponent(sf, Scalar(2) * q), std::nullopt);
  EXPECT_EQ(q_exponent(sf, Scalar::alpha()), std::nullopt);
  EXPECT_EQ(q_exponent(eval_field(), Rational(8)), 3);
  EXPECT_EQ(q_exponent(eval_field(), Rational(mpq_class(1, 4))), -2);
  EXPECT_EQ(q_exponent(eval_field(), Rational(6)), std::nullopt);
  EXPECT_EQ(q_exponent(eval_field(), Rational(-8)), std::nullopt);
}

TEST(Solver, SymbolicSmallWindows) {
  const auto& S = analyzer();
  const auto generic = S.solve_whittaker_vectors(Scalar(1), Scalar(0), 0, 2);
  ASSERT_EQ(generic.size(), 1u);
  EXPECT_EQ(generic[0], S.v_bar(0));
  const auto& p = panel("roots-1-2");
  const auto basis = S.solve_whittaker_vectors(p.kappa, p.c, 0, 3);
  EXPECT_EQ(basis.size(), 3u);
  std::vector<std::map<BasisIndex, Scalar>> expected;
  for (const Vec& v : {S.v_bar(0), S.u_bar(1, 0, p.kappa, p.c), S.u_bar(2, 0, p.kappa, p.c)}) {
    std::map<BasisIndex, Scalar> m;
    for (const auto& [idx, poly] : v.terms()) m.emplace(idx, poly.constant_term());
    expected.push_back(std::move(m));
  }
  for (const Vec& w : basis) {
    EXPECT_TRUE(S.is_whittaker_vector(w, 0, p.kappa, p.c));
    std::map<BasisIndex, Scalar> m;
    for (const auto& [idx, poly] : w.terms()) m.emplace(idx, poly.constant_term());
    EXPECT_TRUE(solve_combination(expected, m).has_value());
  }
}

TEST(Solver, PanelDimensionsAndDecomposition) {
  const auto& S = analyzer();
  const auto& E = eval_analyzer();
  for (const auto& p : reference_panel()) {
    const int n_plus = p.roots.empty() ? 1 : p.roots.back();
    const int window = n_plus + 1;
    for (int l : {0, 1}) {
      std::vector<Vec> expected{S.v_bar(l)};
      for (int n : p.roots) expected.push_back(S.u_bar(n, l, p.kappa, p.c));
      std::vector<std::map<BasisIndex, Rational>> columns;
      for (const Vec& v : expected) {
        EXPECT_TRUE(S.is_whittaker_vector(v, l, p.kappa, p.c)) << p.name;
        columns.push_back(coordinates(lift(v)));
      }
      const auto basis = E.solve_whittaker_vectors(eval_field().lift(p.kappa), eval_field().lift(p.c), l, window);
      EXPECT_EQ(basis.size(), expected.size()) << p.name << " l=" << l;
      for (const auto& w : basis) EXPECT_TRUE(solve_combination(columns, coordinates(w)).has_value()) << p.name;
    }
  }
}

TEST(Solver, RejectsBadArguments) {
  EXPECT_THROW(analyzer().solve_whittaker_vectors(Scalar(0), Scalar(0), 0, 2), DomainError);
  EXPECT_THROW(analyzer().solve_whittaker_vectors(Scalar(1), Scalar(0), 0, 0), DomainError);
}

TEST(CriticalVectors, EigenvaluesLadderAndSeparation) {
  const auto& S = analyzer();
  const auto& M = S.module();
  for (const auto& p : reference_panel()) {
    const auto r = S.criticality(p.kappa, p.c);
    const auto ideal = IdealSpec<Scalar>::maximal(p.kappa, p.c);
    for (const auto& root : {r.minus, r.plus}) {
      if (!root) continue;
      const Vec u = S.u_bar(root->n, 0, p.kappa, p.c);
      EXPECT_EQ(M.reduce(M.act_k(M.u_element(root->n, 0, Poly::one()), 1), ideal), u.scaled(root->kappa)) << p.name;
      EXPECT_EQ(M.reduce(M.act_c1(u), ideal), u.scaled(root->c)) << p.name;
      EXPECT_FALSE(root->kappa == p.kappa && root->c == p.c) << p.name;
    }
    if (r.roots.size() == 2) {
      Vec ladder = S.u_bar(r.roots[0], 0, p.kappa, p.c);
      for (int i = r.roots[0]; i < r.roots[1]; ++i) ladder = M.reduce(M.apply_g(ladder), ideal);
      EXPECT_EQ(ladder, S.u_bar(r.roots[1], 0, p.kappa, p.c)) << p.name;
      EXPECT_FALSE(r.minus->kappa == r.plus->kappa && r.minus->c == r.plus->c) << p.name;
    }
  }
}

TEST(Membership, CriticalSubmodules) {
  const auto& S = analyzer();
  const auto& p = panel("roots-1-2");
  const Vec u_minus = S.u_bar(1, 0, p.kappa, p.c);
  const Vec u_plus = S.u_bar(2, 0, p.kappa, p.c);
  EXPECT_TRUE(S.submodule_membership(u_plus, 1, p.kappa, p.c, 4));
  EXPECT_FALSE(S.submodule_membership(u_minus, 2, p.kappa, p.c, 4));
  EXPECT_FALSE(S.submodule_membership(S.v_bar(0), 1, p.kappa, p.c, 4));
  EXPECT_TRUE(S.submodule_membership(u_minus, 1, p.kappa, p.c, 4));
  // F2 u_plus is in both submodules; its leading index needs a = 1.
  const Vec f2u = S.module().act(Letter::F2, u_plus);
  EXPECT_TRUE(S.submodule_membership(f2u, 2, p.kappa, p.c, 1));
  EXPECT_THROW(S.submodule_membership(f2u, 2, p.kappa, p.c, 0), Inconclusive);
}

TEST(Composition, ReferencePairs) {
  const auto& S = analyzer();
  const auto irr = S.composition_report(Scalar(1), Scalar(0));
  EXPECT_EQ(irr.kind, CompositionKind::Irreducible);
  EXPECT_TRUE(irr.layers.empty());

  const auto& two = panel("roots-1-2");
  const auto ts = S.composition_report(two.kappa, two.c);
  EXPECT_EQ(ts.kind, CompositionKind::TwoStep);
  ASSERT_EQ(ts.layers.size(), 2u);
  EXPECT_EQ(ts.layers[0].root.n, 2);
  EXPECT_EQ(ts.layers[1].root.n, 1);
  EXPECT_EQ(ts.layers[1].root.kappa, Scalar::q_power(-3));
  EXPECT_EQ(ts.layers[1].root.c, (q * q + Scalar::q_power(-2)) / d2);
  EXPECT_EQ(ts.layers[1].layer_roots, (std::vector<int>{1}));
  EXPECT_TRUE(ts.layers[0].layer_roots.empty());

  const auto& one = panel("root-1");
  const auto up = S.composition_report(one.kappa, one.c);
  EXPECT_EQ(up.kind, CompositionKind::UniqueProper);
  ASSERT_EQ(up.layers.size(), 1u);
  EXPECT_EQ(up.layers[0].root.n, 1);
  EXPECT_TRUE(up.layers[0].layer_roots.empty());
  EXPECT_EQ(kind_name(up.kind), "unique_proper");
}

TEST(Center, GeneratorsAreCentral) {
  for (const auto& r : centrality_checks(algebra(), center())) {
    EXPECT_TRUE(r.vanishes) << r.element << " with " << letter_name(r.generator) << ": " << r.terms << " terms";
  }
}

TEST(Center, WeightZero) {
  for (const auto* z : {&center().x1, &center().x2, &center().z1, &center().z2, &center().z3}) {
    for (const auto& [m, c] : z->terms()) EXPECT_EQ(m.weight(), (std::pair<int, int>{0, 0})) << m.str();
  }
}

TEST(Center, CasimirAtGenericPoint) {
  const auto& M = analyzer().module();
  const auto r = casimir_eigen_check(M, center(), analyzer().v_bar(0), Scalar(1), Scalar(0), Scalar(1), Scalar(0));
  EXPECT_EQ(r.ab, Scalar(1));
  EXPECT_EQ(r.a3, Scalar::q_power(-9));
  EXPECT_EQ(r.b3, Scalar::q_power(9));
  EXPECT_TRUE(r.z1 && r.z2 && r.z3);
  EXPECT_TRUE(r.sextic_value.is_zero());
  EXPECT_FALSE(r.derived_t2.has_value());
}

TEST(Center, CasimirOnPanel) {
  const auto& S = analyzer();
  for (const auto& p : reference_panel()) {
    const auto r = casimir_eigen_check(S.module(), center(), S.v_bar(0), p.kappa, p.c, p.kappa, p.c);
    EXPECT_TRUE(r.passed()) << p.name;
    const auto crit = S.criticality(p.kappa, p.c);
    for (const auto& root : {crit.minus, crit.plus}) {
      if (!root) continue;
      const auto ru =
          casimir_eigen_check(S.module(), center(), S.u_bar(root->n, 0, p.kappa, p.c), p.kappa, p.c, root->kappa, root->c);
      EXPECT_TRUE(ru.passed()) << p.name << " n=" << root->n;
    }
  }
}

}  // namespace
}  // namespace uqsl3
