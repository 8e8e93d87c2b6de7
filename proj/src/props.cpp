#include "hhb/props.hpp"

#include <cmath>

#include "hhb/errors.hpp"

namespace hhb {
namespace {

// Doubled midpoint gap for f = x^s: |(s-1) L_s^s + A^s|.
double power_lhs(const PositiveInterval& iv, double s) {
  const double lss = generalized_log_mean_pow(iv, MeanExponent(s));
  const double as = std::pow(arithmetic_mean(iv), s);
  return std::fabs((s - 1.0) * lss + as);
}

void finish(PropReport& r, const Tolerances& tol) {
  r.margin = r.rhs - r.lhs;
  r.ratio = r.rhs != 0.0 ? r.lhs / r.rhs : 0.0;
  r.holds = r.lhs <= r.rhs + tol.compare;
}

// |d/dx x^s| = s x^(s-1), as a sampled function for certification.
std::function<double(double)> power_deriv_abs(double s, double q) {
  return [s, q](double y) { return std::pow(s * std::pow(y, s - 1.0), q); };
}

}  // namespace

PropReport prop1(const PositiveInterval& iv, SParameter s,
                 const Tolerances& tol, int classify_grid) {
  const double ss = s.s();
  const double u = iv.u(), v = iv.v();
  const double a = arithmetic_mean(iv);
  const double as = std::pow(a, ss);
  const double d = (ss + 1.0) * (ss + 2.0);

  PropReport r;
  r.id = 1;
  r.u = u;
  r.v = v;
  r.s = ss;
  r.lhs = power_lhs(iv, ss);
  r.rhs = ss / (ss + 1.0) * as +
          ss / (ss + 2.0) * 0.5 * (std::pow(u, ss) + std::pow(v, ss)) +
          ss * (u * v) / d * 0.5 *
              (std::pow(u, ss - 2.0) + std::pow(v, ss - 2.0));
  finish(r, tol);
  if (classify_grid > 0)
    r.hypothesis = classify(power_deriv_abs(ss, 1.0), iv,
                            ConvexClass::SConvex, s, classify_grid);
  return r;
}

PropReport prop2(const PositiveInterval& iv, SParameter s, HolderPair q,
                 const Tolerances& tol, int classify_grid) {
  const double ss = s.s();
  const double qq = q.q();
  const double u = iv.u(), v = iv.v();
  const double a = arithmetic_mean(iv);
  const double lp = generalized_log_mean(iv, MeanExponent(q.p()));
  const double aq = std::pow(a, (ss - 1.0) * qq);
  const double uq = std::pow(u, (ss - 1.0) * qq);
  const double vq = std::pow(v, (ss - 1.0) * qq);
  const double brackets =
      std::pow(aq + vq, 1.0 / qq) + std::pow(aq + uq, 1.0 / qq);

  PropReport r;
  r.id = 2;
  r.u = u;
  r.v = v;
  r.s = ss;
  r.q = qq;
  r.lhs = power_lhs(iv, ss);
  r.rhs = 0.5 * lp * ss * std::pow(1.0 / (ss + 1.0), 1.0 / qq) * brackets;
  r.rhs_as_printed =
      0.5 * lp * std::pow(ss / (ss + 1.0), 1.0 / qq) * brackets;
  finish(r, tol);
  if (classify_grid > 0)
    r.hypothesis = classify(power_deriv_abs(ss, qq), iv,
                            ConvexClass::SConvex, s, classify_grid);
  return r;
}

PropReport prop3(const PositiveInterval& iv, SParameter s,
                 PowerMeanExponent q, const Tolerances& tol,
                 int classify_grid) {
  const double ss = s.s();
  const double qq = q.q();
  const double u = iv.u(), v = iv.v();
  const double a = arithmetic_mean(iv);
  const double sp1 = ss + 1.0;
  const double d = sp1 * (ss + 2.0);
  const double aq = std::pow(a, (ss - 1.0) * qq);
  const double uq = std::pow(u, (ss - 1.0) * qq);
  const double vq = std::pow(v, (ss - 1.0) * qq);
  const double prefactor =
      std::pow(std::pow(ss, qq) * std::pow(a, qq - 1.0) /
                   (d * std::pow(2.0, qq)),
               1.0 / qq);
  const double b1 = (sp1 * u + v) * aq + (sp1 * v + u) * vq;
  const double b2 = (sp1 * v + u) * aq + (sp1 * u + v) * uq;

  PropReport r;
  r.id = 3;
  r.u = u;
  r.v = v;
  r.s = ss;
  r.q = qq;
  r.lhs = power_lhs(iv, ss);
  r.rhs = prefactor * (std::pow(b1, 1.0 / qq) + std::pow(b2, 1.0 / qq));
  finish(r, tol);
  if (classify_grid > 0)
    r.hypothesis = classify(power_deriv_abs(ss, qq), iv,
                            ConvexClass::SConvex, s, classify_grid);
  return r;
}

PropReport prop4(const PositiveInterval& iv, HolderPair q,
                 const Tolerances& tol, int classify_grid) {
  const double u = iv.u(), v = iv.v();
  if (!(v < M_PI))
    throw DomainError("the sine bound needs 0 < u < v < pi");
  const double qq = q.q();
  const double a = arithmetic_mean(iv);
  const double lp = generalized_log_mean(iv, MeanExponent(q.p()));

  PropReport r;
  r.id = 4;
  r.u = u;
  r.v = v;
  r.q = qq;
  r.lhs = std::fabs((v * std::sin(v) - u * std::sin(u) + 2.0 * std::cos(v) -
                     2.0 * std::cos(u)) /
                        (v - u) +
                    std::sin(a));
  r.rhs = 0.5 * lp *
          (std::fabs(std::cos((u + 3.0 * v) / 4.0)) +
           std::fabs(std::cos((3.0 * u + v) / 4.0)));
  finish(r, tol);
  if (classify_grid > 0) {
    const auto g = [qq](double y) {
      return std::pow(std::fabs(std::cos(y)), qq);
    };
    r.hypothesis =
        classify(g, iv, ConvexClass::Concave, std::nullopt, classify_grid);
  }
  return r;
}

}  // namespace hhb
