#pragma once

/**
 * @file expr.hpp
 * @brief Text syntax for scalars, algebra elements and module vectors.
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '/') unary)*
 *   unary  := '-' unary | factor
 *   factor := atom ('^' '-'? int)?
 *   atom   := int | 'q' | 'alpha' | gen | 'C1' | '[' int ']' | 'qbinom(' int ',' int ')'
 *           | 'u(' int ',' int ',' expr ')' | 'g' | 'v' | '(' expr ')'
 *   gen    := 'E1' | 'E2' | 'E3' | 'F1' | 'F2' | 'F3' | 'K1' | 'K2' | 'K'
 *
 * Multiplication is always explicit. A vector (v or u(...)) may only appear
 * as the rightmost factor of a product; the parser rejects anything else.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uqsl3/coeff_poly.hpp"
#include "uqsl3/errors.hpp"
#include "uqsl3/field.hpp"
#include "uqsl3/pbw.hpp"
#include "uqsl3/whittaker.hpp"

namespace uqsl3 {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class ExprKind { Number, Q, Alpha, Gen, C1, QInt, QBinom, Pow, Mul, Div, Add, Neg, Vec, U, G };

struct Expr {
  ExprKind kind = ExprKind::Number;
  /// Number value, [n], qbinom(n, k), u(n, l, .) integers, or the exponent of Pow.
  long a = 0;
  long b = 0;
  /// Generator name for Gen: E1 ... F3, K1, K2 or K.
  std::string name;
  std::vector<Expr> children;
  Span span;

  /// Structural equality, ignoring spans.
  friend bool operator==(const Expr& x, const Expr& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.name == y.name && x.children == y.children;
  }
};

namespace detail {

inline bool is_generator_name(const std::string& s) {
  return s == "E1" || s == "E2" || s == "E3" || s == "F1" || s == "F2" || s == "F3" || s == "K1" || s == "K2" ||
         s == "K";
}

/// True when the value of e is a module vector.
inline bool holds_vector(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Vec:
    case ExprKind::U:
      return true;
    case ExprKind::Add:
      for (const auto& c : e.children) {
        if (holds_vector(c)) return true;
      }
      return false;
    case ExprKind::Neg:
    case ExprKind::Pow:
      return holds_vector(e.children[0]);
    case ExprKind::Mul:
      return holds_vector(e.children.back());
    case ExprKind::Div:
      return holds_vector(e.children[0]);
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  Expr parse() {
    skip_space();
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  Expr parse_expr() {
    const Span start = here();
    Expr first = parse_term();
    std::vector<Expr> terms;
    terms.push_back(std::move(first));
    for (;;) {
      skip_space();
      if (peek() == '+') {
        advance();
        terms.push_back(parse_term());
      } else if (peek() == '-') {
        const Span s = here();
        advance();
        Expr t = parse_term();
        terms.push_back(node(ExprKind::Neg, s, {std::move(t)}));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return node(ExprKind::Add, start, std::move(terms));
  }

  Expr parse_term() {
    skip_space();
    const Span start = here();
    std::vector<Expr> factors;
    factors.push_back(parse_unary());
    for (;;) {
      skip_space();
      if (peek() == '*') {
        advance();
        factors.push_back(parse_unary());
      } else if (peek() == '/') {
        const Span s = here();
        advance();
        Expr den = parse_unary();
        if (holds_vector(den)) fail_at(den.span, "a vector cannot be a divisor");
        Expr num = factors.size() == 1 ? std::move(factors.front()) : node(ExprKind::Mul, start, std::move(factors));
        factors.clear();
        factors.push_back(node(ExprKind::Div, s, {std::move(num), std::move(den)}));
        factors.back().span = start;
      } else {
        break;
      }
    }
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      if (holds_vector(factors[i])) fail_at(factors[i].span, "v must be the rightmost factor");
    }
    if (factors.size() == 1) return std::move(factors.front());
    return node(ExprKind::Mul, start, std::move(factors));
  }

  Expr parse_unary() {
    skip_space();
    if (peek() == '-') {
      const Span s = here();
      advance();
      return node(ExprKind::Neg, s, {parse_unary()});
    }
    return parse_factor();
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    skip_space();
    if (peek() != '^') return base;
    const Span s = base.span;
    advance();
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    long e = parse_int();
    if (holds_vector(base)) fail_at(base.span, "a vector cannot be raised to a power");
    Expr p = node(ExprKind::Pow, s, {std::move(base)});
    p.a = negative ? -e : e;
    return p;
  }

  Expr parse_atom() {
    skip_space();
    const Span s = here();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      Expr n = node(ExprKind::Number, s, {});
      n.a = parse_int();
      return n;
    }
    if (c == '(') {
      advance();
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      advance();
      Expr n = node(ExprKind::QInt, s, {});
      n.a = parse_signed_int();
      expect(']');
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) == 0) fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    std::string id;
    while (std::isalnum(static_cast<unsigned char>(peek())) != 0) {
      id += peek();
      advance();
    }
    if (id == "q") return node(ExprKind::Q, s, {});
    if (id == "alpha") return node(ExprKind::Alpha, s, {});
    if (id == "C1") return node(ExprKind::C1, s, {});
    if (id == "g") return node(ExprKind::G, s, {});
    if (id == "v") return node(ExprKind::Vec, s, {});
    if (is_generator_name(id)) {
      Expr g = node(ExprKind::Gen, s, {});
      g.name = id;
      return g;
    }
    if (id == "qbinom") {
      expect('(');
      Expr n = node(ExprKind::QBinom, s, {});
      n.a = parse_signed_int();
      expect(',');
      n.b = parse_signed_int();
      expect(')');
      return n;
    }
    if (id == "u") {
      expect('(');
      Expr n = node(ExprKind::U, s, {});
      n.a = parse_signed_int();
      if (n.a < 0) fail_at(s, "u(n, l, Q) needs n >= 0");
      expect(',');
      n.b = parse_signed_int();
      expect(',');
      Expr q = parse_expr();
      if (holds_vector(q)) fail_at(q.span, "the coefficient of u(n, l, Q) cannot contain a vector");
      n.children.push_back(std::move(q));
      expect(')');
      return n;
    }
    fail_at(s, "unknown symbol '" + id + "'");
  }

  long parse_signed_int() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    const long v = parse_int();
    return negative ? -v : v;
  }

  long parse_int() {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek())) == 0) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      if (v > 100000000) fail("integer too large");
      v = v * 10 + (peek() - '0');
      advance();
    }
    return v;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  Expr node(ExprKind k, const Span& s, std::vector<Expr> children) {
    Expr e;
    e.kind = k;
    e.children = std::move(children);
    e.span = s;
    e.span.end = pos_;
    return e;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek())) != 0) advance();
  }

  Span here() const { return {pos_, pos_, line_, column_}; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }
  [[noreturn]] static void fail_at(const Span& s, const std::string& message) {
    throw ParseError(message, s.line, s.column);
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline bool is_atomic(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Pow:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Add:
    case ExprKind::Neg:
      return false;
    default:
      return true;
  }
}

}  // namespace detail

inline Expr parse_expr(const std::string& text) { return detail::Parser(text).parse(); }

/// Canonical text; parse_expr(render(e)) == e for every parsed e.
inline std::string render(const Expr& e) {
  auto wrap = [](const Expr& x, bool paren) { return paren ? "(" + render(x) + ")" : render(x); };
  switch (e.kind) {
    case ExprKind::Number:
      return std::to_string(e.a);
    case ExprKind::Q:
      return "q";
    case ExprKind::Alpha:
      return "alpha";
    case ExprKind::Gen:
      return e.name;
    case ExprKind::C1:
      return "C1";
    case ExprKind::QInt:
      return "[" + std::to_string(e.a) + "]";
    case ExprKind::QBinom:
      return "qbinom(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case ExprKind::G:
      return "g";
    case ExprKind::Vec:
      return "v";
    case ExprKind::U:
      return "u(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," + render(e.children[0]) + ")";
    case ExprKind::Pow:
      return wrap(e.children[0], !detail::is_atomic(e.children[0])) + "^" + std::to_string(e.a);
    case ExprKind::Neg:
      return "-" + wrap(e.children[0], !detail::is_atomic(e.children[0]) && e.children[0].kind != ExprKind::Pow &&
                                           e.children[0].kind != ExprKind::Neg);
    case ExprKind::Mul: {
      std::string s;
      for (const auto& c : e.children) {
        if (!s.empty()) s += " * ";
        // A Div factor only arises as the first factor of a term.
        s += wrap(c, c.kind == ExprKind::Add || c.kind == ExprKind::Mul ||
                         (c.kind == ExprKind::Div && &c != &e.children.front()));
      }
      return s;
    }
    case ExprKind::Div: {
      const Expr& den = e.children[1];
      return wrap(e.children[0], e.children[0].kind == ExprKind::Add) + " / " +
             wrap(den, den.kind == ExprKind::Add || den.kind == ExprKind::Mul || den.kind == ExprKind::Div);
    }
    case ExprKind::Add: {
      std::string s = wrap(e.children.front(), e.children.front().kind == ExprKind::Add);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        if (c.kind == ExprKind::Neg) {
          s += " - " + wrap(c.children[0], c.children[0].kind == ExprKind::Add);
        } else {
          s += " + " + wrap(c, c.kind == ExprKind::Add);
        }
      }
      return s;
    }
  }
  return "";
}

/// Value of an expression: a scalar, an element of U, or a vector of M(eta).
template <class T>
using ExprValue = std::variant<T, AlgebraElement<T>, ModuleElement<T>>;

template <CoefficientField F>
class ExprEvaluator {
 public:
  using T = typename F::value_type;
  using Value = ExprValue<T>;

  ExprEvaluator(Algebra<F>& alg, const WhittakerModule<F>& mod) : alg_(alg), mod_(mod) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Number:
        return T(e.a);
      case ExprKind::Q:
        return field().q_power(1);
      case ExprKind::Alpha:
        return mod_.alpha();
      case ExprKind::QInt:
        return q_int(field(), static_cast<int>(e.a));
      case ExprKind::QBinom:
        return q_binom(field(), static_cast<int>(e.a), static_cast<int>(e.b));
      case ExprKind::Gen:
        return generator(e.name);
      case ExprKind::C1: {
        const T inv = T(1) / q_diff_power(field(), 2);
        AlgebraElement<T> c1 = alg_.from_word({Letter::F1, Letter::E1});
        c1.add_scaled(alg_.generator(Letter::K1), field().q_power(1) * inv);
        c1.add_scaled(alg_.generator(Letter::K1inv), field().q_power(-1) * inv);
        return c1;
      }
      case ExprKind::G:
        return g_element();
      case ExprKind::Vec:
        return mod_.vacuum();
      case ExprKind::U:
        return mod_.u_element(static_cast<int>(e.a), static_cast<int>(e.b), coefficient(e.children[0]));
      case ExprKind::Neg:
        return negate(eval(e.children[0]));
      case ExprKind::Pow:
        return power(eval(e.children[0]), e.a, e.span);
      case ExprKind::Div: {
        Value num = eval(e.children[0]);
        const T den = scalar_of(eval(e.children[1]), e.children[1].span, "a divisor must be a scalar");
        if (den.is_zero()) throw DomainError("division by zero");
        return scale(num, T(1) / den);
      }
      case ExprKind::Mul: {
        Value acc = eval(e.children.back());
        for (auto it = e.children.rbegin() + 1; it != e.children.rend(); ++it) acc = multiply(eval(*it), acc);
        return acc;
      }
      case ExprKind::Add: {
        Value acc = eval(e.children.front());
        for (std::size_t i = 1; i < e.children.size(); ++i) acc = add(acc, eval(e.children[i]), e.children[i].span);
        return acc;
      }
    }
    throw Error("unknown expression node");
  }

  /// Scalar value, or an error pointing at the expression.
  T eval_scalar(const Expr& e) { return scalar_of(eval(e), e.span, "expected a scalar"); }

  /// Coefficient Q(K, C1) of u(n, l, Q), built with K and C1 as commuting symbols.
  CoeffPoly<T> coefficient(const Expr& e) {
    using P = CoeffPoly<T>;
    switch (e.kind) {
      case ExprKind::Gen:
        if (e.name == "K") return P::k_power(1);
        throw_at(e.span, "only K and C1 may appear in the coefficient of u(n, l, Q)");
      case ExprKind::C1:
        return P::c1();
      case ExprKind::Neg:
        return -coefficient(e.children[0]);
      case ExprKind::Add: {
        P r;
        for (const auto& c : e.children) r += coefficient(c);
        return r;
      }
      case ExprKind::Mul: {
        P r = P::one();
        for (const auto& c : e.children) r = r * coefficient(c);
        return r;
      }
      case ExprKind::Div: {
        const T den = eval_scalar(e.children[1]);
        if (den.is_zero()) throw DomainError("division by zero");
        return coefficient(e.children[0]).scaled(T(1) / den);
      }
      case ExprKind::Pow: {
        const P base = coefficient(e.children[0]);
        if (e.a >= 0) {
          P r = P::one();
          for (long i = 0; i < e.a; ++i) r = r * base;
          return r;
        }
        if (base.size() != 1 || base.terms().begin()->first.second != 0) {
          throw_at(e.span, "only monomials in K have negative powers");
        }
        const auto& [key, c] = *base.terms().begin();
        return P::term(c.pow(static_cast<int>(e.a)), key.first * static_cast<int>(e.a), 0);
      }
      default:
        return P::constant(eval_scalar(e));
    }
  }

 private:
  const F& field() const { return mod_.field(); }

  [[noreturn]] static void throw_at(const Span& s, const std::string& message) {
    throw ParseError(message, s.line, s.column);
  }

  AlgebraElement<T> generator(const std::string& name) const {
    if (name == "K") return alg_.k_power(1);
    static const std::pair<const char*, Letter> table[] = {{"E1", Letter::E1}, {"E2", Letter::E2}, {"E3", Letter::E3},
                                                           {"F1", Letter::F1}, {"F2", Letter::F2}, {"F3", Letter::F3},
                                                           {"K1", Letter::K1}, {"K2", Letter::K2}};
    for (const auto& [n, x] : table) {
      if (name == n) return alg_.generator(x);
    }
    throw Error("unknown generator " + name);
  }

  /// g = F2 (1 - q^-2 K2^2 K^-2) + alpha (1 - q^-2) F3 K^-1.
  AlgebraElement<T> g_element() {
    AlgebraElement<T> inner = alg_.one();
    inner.add_scaled(alg_.multiply(alg_.from_word({Letter::K2, Letter::K2}), alg_.k_power(-2)), -field().q_power(-2));
    AlgebraElement<T> g = alg_.multiply(alg_.generator(Letter::F2), inner);
    g.add_scaled(alg_.multiply(alg_.generator(Letter::F3), alg_.k_power(-1)),
                 mod_.alpha() * (T(1) - field().q_power(-2)));
    return g;
  }

  T scalar_of(const Value& v, const Span& s, const std::string& message) const {
    if (const T* t = std::get_if<T>(&v)) return *t;
    throw_at(s, message);
  }

  static Value negate(const Value& v) { return scale(v, T(-1)); }

  static Value scale(const Value& v, const T& c) {
    return std::visit(
        [&c](const auto& x) -> Value {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, T>) {
            return x * c;
          } else {
            return x.scaled(c);
          }
        },
        v);
  }

  AlgebraElement<T> as_algebra(const Value& v) const {
    if (const T* t = std::get_if<T>(&v)) return alg_.scalar(*t);
    return std::get<AlgebraElement<T>>(v);
  }

  Value add(const Value& x, const Value& y, const Span& s) const {
    const bool xv = std::holds_alternative<ModuleElement<T>>(x);
    const bool yv = std::holds_alternative<ModuleElement<T>>(y);
    if (xv != yv) throw_at(s, "cannot add a vector and an algebra element");
    if (xv) return std::get<ModuleElement<T>>(x) + std::get<ModuleElement<T>>(y);
    if (std::holds_alternative<T>(x) && std::holds_alternative<T>(y)) return std::get<T>(x) + std::get<T>(y);
    return as_algebra(x) + as_algebra(y);
  }

  Value multiply(const Value& x, const Value& y) {
    if (const T* t = std::get_if<T>(&x)) return scale(y, *t);
    const auto& a = std::get<AlgebraElement<T>>(x);
    if (const auto* m = std::get_if<ModuleElement<T>>(&y)) return mod_.act(a, *m);
    if (const T* t = std::get_if<T>(&y)) return a.scaled(*t);
    return alg_.multiply(a, std::get<AlgebraElement<T>>(y));
  }

  Value power(const Value& base, long e, const Span& s) {
    if (const T* t = std::get_if<T>(&base)) {
      if (t->is_zero() && e < 0) throw DomainError("division by zero");
      return t->pow(static_cast<int>(e));
    }
    const auto& a = std::get<AlgebraElement<T>>(base);
    if (e >= 0) return alg_.power(a, static_cast<unsigned>(e));
    // Negative powers exist for monomials in K1, K2 with invertible coefficient.
    if (a.size() != 1) throw_at(s, "only monomials in K1, K2 have negative powers");
    const auto& [m, c] = *a.terms().begin();
    if (m.f1 || m.f2 || m.f3 || m.e1 || m.e2 || m.e3) throw_at(s, "only monomials in K1, K2 have negative powers");
    PBWMonomial inv;
    inv.k1 = m.k1 * static_cast<int>(e);
    inv.k2 = m.k2 * static_cast<int>(e);
    return AlgebraElement<T>::monomial(inv, c.pow(static_cast<int>(e)));
  }

  Algebra<F>& alg_;
  const WhittakerModule<F>& mod_;
};

}  // namespace uqsl3
