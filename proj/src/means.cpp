#include "hhb/means.hpp"

#include <cmath>
#include <sstream>

namespace hhb {

PositiveInterval::PositiveInterval(double u, double v) : u_(u), v_(v) {
  if (!(std::isfinite(u) && std::isfinite(v)) || !(u > 0.0) || !(u < v)) {
    std::ostringstream os;
    os << "interval: require 0 < u < v (got u=" << u << ", v=" << v << ")";
    throw DomainError(os.str());
  }
}

MeanExponent::MeanExponent(double p) : p_(p) {
  if (!std::isfinite(p) || p == -1.0 || p == 0.0) {
    std::ostringstream os;
    os << "mean exponent: require finite p with p != -1 and p != 0 (got p="
       << p << ")";
    throw DomainError(os.str());
  }
}

double arithmetic_mean(const PositiveInterval& iv) {
  return 0.5 * (iv.u() + iv.v());
}

double geometric_mean(const PositiveInterval& iv) {
  return std::sqrt(iv.u() * iv.v());
}

double identric_mean(const PositiveInterval& iv) {
  const double u = iv.u(), v = iv.v();
  return std::exp((v * std::log(v) - u * std::log(u)) / (v - u) - 1.0);
}

double generalized_log_mean_pow(const PositiveInterval& iv, MeanExponent p) {
  const double u = iv.u(), v = iv.v();
  const double pp = p.p();
  if (pp == 1.0) return arithmetic_mean(iv);  // exact algebraic reduction
  const double k = pp + 1.0;
  const double d = v - u;
  if (v <= 2.0 * u) {
    // v - u is exact here (Sterbenz); expm1/log1p avoids the cancellation in
    // v^k - u^k on narrow intervals.
    return std::pow(u, k) * std::expm1(k * std::log1p(d / u)) / (k * d);
  }
  return (std::pow(v, k) - std::pow(u, k)) / (k * d);
}

double generalized_log_mean(const PositiveInterval& iv, MeanExponent p) {
  if (p.p() == 1.0) return arithmetic_mean(iv);
  return std::pow(generalized_log_mean_pow(iv, p), 1.0 / p.p());
}

}  // namespace hhb
