#include "hhb/funcmodel.hpp"

#include <cmath>
#include <cstdio>

namespace hhb {

SParameter::SParameter(double s) : s_(s) {
  if (!(s > 0.0) || !(s <= 1.0) || !std::isfinite(s)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "s must lie in (0, 1] (got %g)", s);
    throw DomainError(buf);
  }
}

FunctionModel::FunctionModel(ExprPtr tree)
    : tree_(std::move(tree)), dtree_(diff_expr(tree_)) {}

FunctionModel FunctionModel::parse(std::string_view text) {
  return FunctionModel(parse_expression(text));
}

FunctionModel FunctionModel::from_tree(ExprPtr tree) {
  return FunctionModel(std::move(tree));
}

FunctionModel FunctionModel::power(double exponent) {
  return FunctionModel(make_pow(make_var(), make_const(exponent)));
}

FunctionModel FunctionModel::sine() {
  return FunctionModel(make_call(UnaryFn::Sin, make_var()));
}

FunctionModel FunctionModel::polynomial(const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw DomainError("polynomial needs coefficients");
  ExprPtr e = make_const(coeffs[0]);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    ExprPtr mono = k == 1 ? make_var()
                          : make_pow(make_var(),
                                     make_const(static_cast<double>(k)));
    e = make_add(std::move(e),
                 make_mul(make_const(coeffs[k]), std::move(mono)));
  }
  return FunctionModel(std::move(e));
}

FunctionModel FunctionModel::exponential() {
  return FunctionModel(make_call(UnaryFn::Exp, make_var()));
}

FunctionModel FunctionModel::affine(double slope, double intercept) {
  return FunctionModel(make_add(make_mul(make_const(slope), make_var()),
                                make_const(intercept)));
}

namespace {

constexpr int kProbePoints = 64;

double probe_x(double a, double b, int i) {
  return a + (i + 0.5) * (b - a) / kProbePoints;
}

// Collect every abs() argument subtree so probe_derivative can scan each for
// sign changes across the interval.
void collect_abs_args(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (!e) return;
  if (e->kind == NodeKind::Call && e->fn == UnaryFn::Abs) out.push_back(e->a);
  collect_abs_args(e->a, out);
  collect_abs_args(e->b, out);
}

}  // namespace

void probe_values(const FunctionModel& f, double a, double b) {
  for (int i = 0; i < kProbePoints; ++i) {
    const double x = probe_x(a, b, i);
    const double y = f.eval(x);
    if (!std::isfinite(y)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s is not finite at x=%.17g",
                    f.str().c_str(), x);
      throw DomainError(buf);
    }
  }
}

void probe_derivative(const FunctionModel& f, double a, double b) {
  probe_values(f, a, b);
  for (int i = 0; i < kProbePoints; ++i) {
    const double x = probe_x(a, b, i);
    const double d = f.deriv(x);
    if (!std::isfinite(d))
      throw DerivativeMismatch("derivative is not finite inside the interval");
    const double h = 1e-6 * std::max(1.0, std::fabs(x));
    const double fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h);
    const double scale = std::max({1.0, std::fabs(fd), std::fabs(d)});
    if (std::fabs(fd - d) > 1e-6 * scale) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "symbolic derivative %.6g disagrees with finite "
                    "difference %.6g at x=%.17g",
                    d, fd, x);
      throw DerivativeMismatch(buf);
    }
  }
  // A kink from abs() can slip between finite-difference probes, so check the
  // sign of each abs argument directly across the whole interval.
  std::vector<ExprPtr> args;
  collect_abs_args(f.tree(), args);
  for (const ExprPtr& arg : args) {
    int sign_seen = 0;
    for (int i = 0; i <= 4 * kProbePoints; ++i) {
      const double x = a + i * (b - a) / (4 * kProbePoints);
      const double g = eval_expr(arg, x);
      if (g == 0.0) continue;
      const int sg = g > 0.0 ? 1 : -1;
      if (sign_seen == 0) sign_seen = sg;
      if (sg != sign_seen)
        throw DerivativeMismatch(
            "abs() argument changes sign inside the interval, so the "
            "derivative is undefined at the crossing");
    }
  }
}

}  // namespace hhb
