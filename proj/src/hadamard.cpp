#include "hhb/hadamard.hpp"

#include <cmath>
#include <cstdio>

#include "hhb/errors.hpp"

namespace hhb {
namespace {

void require_ordered(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v) || !(u >= 0.0) || !(u < v)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "require 0 <= u < v (got u=%g, v=%g)", u,
                  v);
    throw DomainError(buf);
  }
}

ChainReport finish_chain(double left, double middle, double right,
                         const Tolerances& tol, Direction dir) {
  ChainReport r;
  r.left = left;
  r.middle = middle;
  r.right = right;
  if (dir == Direction::Forward) {
    r.left_holds = left <= middle + tol.compare;
    r.right_holds = middle <= right + tol.compare;
  } else {
    r.left_holds = left >= middle - tol.compare;
    r.right_holds = middle >= right - tol.compare;
  }
  r.holds = r.left_holds && r.right_holds;
  return r;
}

double mean_of(const FunctionModel& f, double u, double v,
               const Tolerances& tol) {
  return integral_mean([&f](double x) { return f.eval(x); }, u, v,
                       tol.quadrature, tol.max_evals);
}

}  // namespace

ChainReport hh_check(const FunctionModel& f, double u, double v,
                     const Tolerances& tol, Direction dir) {
  require_ordered(u, v);
  probe_values(f, u, v);
  const double left = f.eval(0.5 * (u + v));
  const double middle = mean_of(f, u, v, tol);
  const double right = (f.eval(u) + f.eval(v)) / 2.0;
  return finish_chain(left, middle, right, tol, dir);
}

ChainReport shh_check(const FunctionModel& f, double u, double v, SParameter s,
                      const Tolerances& tol, Direction dir) {
  require_ordered(u, v);
  probe_values(f, u, v);
  const double left = std::pow(2.0, s.s() - 1.0) * f.eval(0.5 * (u + v));
  const double middle = mean_of(f, u, v, tol);
  const double right = (f.eval(u) + f.eval(v)) / (s.s() + 1.0);
  return finish_chain(left, middle, right, tol, dir);
}

static void require_inside(const PositiveInterval& iv, double x) {
  if (!std::isfinite(x) || x < iv.u() || x > iv.v()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "x=%g outside [%g, %g]", x, iv.u(),
                  iv.v());
    throw DomainError(buf);
  }
}

double lemma1_lhs(const FunctionModel& f, const PositiveInterval& iv, double x,
                  const Tolerances& tol) {
  require_inside(iv, x);
  const double u = iv.u(), v = iv.v(), w = iv.width();
  const double boundary = ((v - x) * (v * f.eval(v) - u * f.eval(x)) +
                           (x - u) * (v * f.eval(x) - u * f.eval(u))) /
                          (w * w);
  return boundary - mean_of(f, u, v, tol);
}

double lemma1_rhs(const FunctionModel& f, const PositiveInterval& iv, double x,
                  const Tolerances& tol) {
  require_inside(iv, x);
  const double u = iv.u(), v = iv.v(), w = iv.width();
  const double w1 = ((v - x) / w) * ((v - x) / w);
  const double w2 = ((x - u) / w) * ((x - u) / w);
  const auto seg1 = [&](double t) {
    return (t * u + (1.0 - t) * v) * f.deriv(t * x + (1.0 - t) * v);
  };
  const auto seg2 = [&](double t) {
    return (t * v + (1.0 - t) * u) * f.deriv(t * x + (1.0 - t) * u);
  };
  double total = 0.0;
  // Degenerate weights (x at an endpoint) skip the vanished term entirely so
  // the derivative is never sampled on a zero-length segment.
  if (w1 != 0.0)
    total += w1 * integrate(seg1, 0.0, 1.0, tol.quadrature, tol.max_evals)
                      .value;
  if (w2 != 0.0)
    total += w2 * integrate(seg2, 0.0, 1.0, tol.quadrature, tol.max_evals)
                      .value;
  return total;
}

IdentityReport verify_identity(const FunctionModel& f,
                               const PositiveInterval& iv, double x,
                               const Tolerances& tol) {
  require_inside(iv, x);
  probe_derivative(f, iv.u(), iv.v());
  IdentityReport r;
  r.lhs = lemma1_lhs(f, iv, x, tol);
  r.rhs = lemma1_rhs(f, iv, x, tol);
  r.residual = std::fabs(r.lhs - r.rhs);
  r.tol = tol.compare;
  r.holds = r.residual <= tol.compare;
  return r;
}

}  // namespace hhb
