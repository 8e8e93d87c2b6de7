#pragma once

#include <string_view>
#include <vector>

#include "hhb/expr.hpp"

namespace hhb {

// Convexity parameter in (0, 1].
class SParameter {
 public:
  explicit SParameter(double s);
  double s() const { return s_; }

 private:
  double s_;
};

// Immutable differentiable scalar function: an expression tree plus its
// symbolic derivative, built once at construction. Copies share the trees.
class FunctionModel {
 public:
  static FunctionModel parse(std::string_view text);
  static FunctionModel from_tree(ExprPtr tree);

  // Common families.
  static FunctionModel power(double exponent);  // x^exponent
  static FunctionModel sine();
  static FunctionModel polynomial(const std::vector<double>& coeffs);  // c0 + c1 x + ...
  static FunctionModel exponential();  // e^x
  static FunctionModel affine(double slope, double intercept);

  double eval(double x) const { return eval_expr(tree_, x); }
  double deriv(double x) const { return eval_expr(dtree_, x); }
  FunctionModel derivative() const { return FunctionModel(dtree_); }

  std::string str() const { return print_expr(tree_); }
  std::string deriv_str() const { return print_expr(dtree_); }
  const ExprPtr& tree() const { return tree_; }

 private:
  explicit FunctionModel(ExprPtr tree);

  ExprPtr tree_;
  ExprPtr dtree_;
};

// Evaluate f on 64 interior points of [a, b]; a non-finite value raises
// DomainError.
void probe_values(const FunctionModel& f, double a, double b);

// probe_values plus two derivative checks: the symbolic derivative must match
// a central finite difference (step 1e-6 * max(1,|x|), relative tolerance
// 1e-6) at each probe point, and no abs() argument may change sign inside
// [a, b]. Raises DerivativeMismatch.
void probe_derivative(const FunctionModel& f, double a, double b);

}  // namespace hhb
