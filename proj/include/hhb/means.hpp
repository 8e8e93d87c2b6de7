#pragma once

#include "hhb/errors.hpp"

namespace hhb {

// Interval with 0 < u < v. Everything that feeds the special means or the
// bound formulas lives on such an interval.
class PositiveInterval {
 public:
  PositiveInterval(double u, double v);
  double u() const { return u_; }
  double v() const { return v_; }
  double width() const { return v_ - u_; }
  double midpoint() const { return 0.5 * (u_ + v_); }

 private:
  double u_;
  double v_;
};

// Exponent for the generalized log-mean. p = -1 and p = 0 are the removable
// singularities of the formula and are rejected outright, not special-cased.
class MeanExponent {
 public:
  explicit MeanExponent(double p);
  double p() const { return p_; }

 private:
  double p_;
};

double arithmetic_mean(const PositiveInterval& iv);
double geometric_mean(const PositiveInterval& iv);

// (1/e) * (v^v / u^u)^(1/(v-u)), evaluated in log space so large endpoints do
// not overflow: exp((v ln v - u ln u)/(v-u) - 1).
double identric_mean(const PositiveInterval& iv);

// ((v^(p+1) - u^(p+1)) / ((p+1)(v-u)))^(1/p). p=1 is the arithmetic mean and
// is returned as such; nearly-degenerate intervals use an expm1/log1p route to
// dodge the cancellation in v^(p+1) - u^(p+1).
double generalized_log_mean(const PositiveInterval& iv, MeanExponent p);

// p-th power of the generalized log-mean, i.e. the integral mean of x^p over
// [u, v]. Exposed separately because several closed forms consume it directly.
double generalized_log_mean_pow(const PositiveInterval& iv, MeanExponent p);

}  // namespace hhb
