#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hhb/errors.hpp"

namespace hhb {

// Expression trees over a single variable x.
//
// Grammar accepted by parse_expression():
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | base ("^" number)?
//   base   := number | "x" | "pi" | "e" | ident "(" expr ")" | "(" expr ")"
//   ident  := sin | cos | exp | ln | sqrt | abs
// Whitespace is insignificant; "^" binds tighter than unary minus. As an
// extension the exponent may carry a leading "-" so printed derivatives like
// x^-0.5 round-trip.

enum class NodeKind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow, Call };

// Sign is internal only (derivative of Abs); it is printed but not parsed.
enum class UnaryFn { Sin, Cos, Exp, Ln, Sqrt, Abs, Sign };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  NodeKind kind;
  double value = 0.0;         // Constant
  UnaryFn fn = UnaryFn::Sin;  // Call
  ExprPtr a;
  ExprPtr b;
};

// Builders fold constants and drop algebraic no-ops (x+0, 1*x, x^1, ...), so
// derivative trees stay readable.
ExprPtr make_const(double v);
ExprPtr make_var();
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_pow(ExprPtr base, ExprPtr exponent);
ExprPtr make_call(UnaryFn fn, ExprPtr a);

double eval_expr(const ExprPtr& e, double x);

// Symbolic derivative. Supports f(x)^c by the power rule and c^f(x) through
// the exponential rewrite; throws UnsupportedConstruct for f(x)^g(x) with
// both parts varying. d|g|/dx is sign(g)*g' (undefined points are caught by
// the probe, not here).
ExprPtr diff_expr(const ExprPtr& e);

// Re-parseable for any tree the grammar can produce (minimal parentheses,
// shortest round-trip numbers).
std::string print_expr(const ExprPtr& e);

// Throws ParseError carrying the byte offset of the problem.
ExprPtr parse_expression(std::string_view text);

}  // namespace hhb
