#include <gtest/gtest.h>

#include "uqsl3/expr.hpp"

namespace uqsl3 {
namespace {

using Value = ExprValue<Scalar>;

const Scalar q = Scalar::q();

Algebra<SymbolicField>& algebra() {
  static Algebra<SymbolicField> u{SymbolicField{}};
  return u;
}

const WhittakerModule<SymbolicField>& module() {
  static const WhittakerModule<SymbolicField> m{SymbolicField{}};
  return m;
}

Value eval(const std::string& text) {
  ExprEvaluator<SymbolicField> ev(algebra(), module());
  return ev.eval(parse_expr(text));
}

AlgebraElement<Scalar> eval_algebra(const std::string& text) { return std::get<AlgebraElement<Scalar>>(eval(text)); }
ModuleElement<Scalar> eval_vector(const std::string& text) { return std::get<ModuleElement<Scalar>>(eval(text)); }

Expr leaf(ExprKind k, long a = 0, std::string name = "") {
  Expr e;
  e.kind = k;
  e.a = a;
  e.name = std::move(name);
  return e;
}

Expr with(ExprKind k, std::vector<Expr> children, long a = 0) {
  Expr e = leaf(k, a);
  e.children = std::move(children);
  return e;
}

TEST(Parse, Shapes) {
  EXPECT_EQ(parse_expr("F1*F2"), with(ExprKind::Mul, {leaf(ExprKind::Gen, 0, "F1"), leaf(ExprKind::Gen, 0, "F2")}));
  EXPECT_EQ(parse_expr("[2]*K1^-1"),
            with(ExprKind::Mul, {leaf(ExprKind::QInt, 2), with(ExprKind::Pow, {leaf(ExprKind::Gen, 0, "K1")}, -1)}));
  Expr u = leaf(ExprKind::U, 1);
  u.b = 0;
  u.children.push_back(leaf(ExprKind::Number, 1));
  EXPECT_EQ(parse_expr("u(1,0,1)"), u);
  EXPECT_EQ(parse_expr("E1 - F1"),
            with(ExprKind::Add, {leaf(ExprKind::Gen, 0, "E1"), with(ExprKind::Neg, {leaf(ExprKind::Gen, 0, "F1")})}));
}

TEST(Parse, Errors) {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(error_at("E1 * * F1"), (std::pair<std::size_t, std::size_t>{1, 6}));
  EXPECT_EQ(error_at("v * F1"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(error_at("F1 +\n  X3"), (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_EQ(error_at("(F1"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(error_at("F1 F2"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_THROW(parse_expr("v^2"), ParseError);
  EXPECT_THROW(parse_expr("F1 / v"), ParseError);
  EXPECT_THROW(parse_expr("u(1,0,v)"), ParseError);
  EXPECT_THROW(parse_expr("(F1 + v) * v"), ParseError);
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_NO_THROW(parse_expr("F1 * (E1 * v + v)"));
}

TEST(Parse, RenderRoundTrip) {
  const std::vector<std::string> corpus{
      "F1*F2",
      "[2]*K1^-1",
      "u(1,0,1)",
      "E1*E2 - q^-1*E2*E1",
      "F3",
      "E3*F3 - F3*E3",
      "K^2",
      "K^-1*C1",
      "(q+q^-1)/(q-q^-1)^2",
      "2*q + q^-1/2",
      "-alpha",
      "-(E1 + F1)",
      "--F2",
      "qbinom(4,2)*F2^2",
      "[-3]",
      "g*v",
      "g^2*v",
      "u(2,-1,K^-1*C1)",
      "u(3,2,1 + K)",
      "F1*(E1 + E2)*F2",
      "(E1*F1)*K2",
      "((E1))",
      "E1 + (F1 + F2)",
      "(E1 + F1) + F2",
      "C1*v",
      "K1*K2^-2*v - q^3*v",
      "alpha^2*(q^2 - 1)^-1*F2*v",
      "1/2*E1",
      "E1/2/q",
      "(E1/2)/q",
      "E1*(F1/2)",
      "F2^3*F3^2*K2^-1*v",
      "q^-1*(K - K^-1)/(q - q^-1)",
      "E2*E1 - q^-1*E1*E2",
      "-(q*F1)*E1",
      "K1^0",
  };
  ASSERT_GE(corpus.size(), 30u);
  for (const auto& text : corpus) {
    const Expr e = parse_expr(text);
    const std::string r = render(e);
    EXPECT_EQ(parse_expr(r), e) << text << " -> " << r;
    EXPECT_EQ(render(parse_expr(r)), r) << text;
  }
}

TEST(Evaluate, NormalForms) {
  EXPECT_EQ(eval_algebra("E1*E2 - q^-1*E2*E1"), algebra().generator(Letter::E3));
  EXPECT_EQ(render(SymbolicField{}, eval_algebra("E1*E2 - q^-1*E2*E1")), "E3");
  EXPECT_EQ(eval_algebra("K1*K1^-1"), algebra().one());
  EXPECT_EQ(eval_algebra("K"), algebra().k_power(1));
  EXPECT_EQ(eval_algebra("K^-1*K"), algebra().one());
  EXPECT_EQ(std::get<Scalar>(eval("[3]")), q * q + Scalar(1) + q.pow(-2));
  EXPECT_EQ(std::get<Scalar>(eval("qbinom(3,1)")), q_integer(3));
  EXPECT_EQ(std::get<Scalar>(eval("(q+q^-1)/(q-q^-1)^2")), (q + q.inverse()) / (q - q.inverse()).pow(2));
  EXPECT_THROW(eval("(E1 + F1)^-1"), ParseError);
  EXPECT_THROW(eval("E1/F1"), ParseError);
  EXPECT_THROW(eval("E1 + v"), ParseError);
  EXPECT_THROW(eval("E1/0"), DomainError);
}

TEST(Evaluate, ModuleVectors) {
  const auto& M = module();
  EXPECT_EQ(eval_vector("u(1,0,1)"), eval_vector("g*v"));
  EXPECT_EQ(eval_vector("u(2,0,1)"), M.g_power(2, CoeffPoly<Scalar>::one()));
  EXPECT_EQ(eval_vector("g^2*v"), M.g_power(2, CoeffPoly<Scalar>::one()));
  EXPECT_EQ(eval_vector("C1*v"), M.act_c1(M.vacuum()));
  EXPECT_EQ(eval_vector("K*v"), M.act_k(M.vacuum(), 1));
  EXPECT_EQ(eval_vector("E1*v"), M.vacuum().scaled(Scalar::alpha()));
  EXPECT_EQ(eval_vector("E2*v"), ModuleElement<Scalar>());
  EXPECT_EQ(eval_vector("u(1,1,K^-1*C1)"),
            M.u_element(1, 1, CoeffPoly<Scalar>::term(Scalar(1), -1, 1)));
  EXPECT_EQ(eval_vector("F1*(E1*v + v)"), M.act(Letter::F1, M.vacuum().scaled(Scalar::alpha() + Scalar(1))));
  EXPECT_THROW(eval("u(1,0,E1)"), ParseError);
  EXPECT_THROW(eval("u(1,0,C1^-1)"), ParseError);
}

TEST(Evaluate, EvaluatedFieldMatchesLift) {
  const EvaluatedField f{EvalPoint(3, 2)};
  Algebra<EvaluatedField> alg{f};
  const WhittakerModule<EvaluatedField> mod{f};
  ExprEvaluator<EvaluatedField> ev(alg, mod);
  const auto value = std::get<Rational>(ev.eval(parse_expr("(q+q^-1)/(q-q^-1)^2*alpha")));
  EXPECT_EQ(value, f.lift((q + q.inverse()) / (q - q.inverse()).pow(2) * Scalar::alpha()));
  const auto e3 = std::get<AlgebraElement<Rational>>(ev.eval(parse_expr("E1*E2 - q^-1*E2*E1")));
  EXPECT_EQ(e3, alg.generator(Letter::E3));
}

}  // namespace
}  // namespace uqsl3
