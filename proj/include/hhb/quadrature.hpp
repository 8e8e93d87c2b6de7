#pragma once

#include <functional>

#include "hhb/errors.hpp"

namespace hhb {

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr long kDefaultEvalBudget = 100000;

struct QuadratureResult {
  double value = 0.0;
  // Sum of the per-panel |high-order - low-order| differences over accepted
  // panels; bounded by the requested tolerance on success.
  double error_estimate = 0.0;
  long n_evals = 0;
};

// Adaptive integration of f over [a, b] (a <= b) to absolute tolerance tol.
// Each panel is evaluated with an embedded Gauss-7 / Kronrod-15 pair; a panel
// whose discrepancy exceeds its share of the tolerance is bisected and the
// shares halved. Evaluation order is fixed, so results are deterministic.
// Throws QuadratureError when the eval budget runs out, an integrand sample is
// non-finite, or the final estimate still exceeds tol.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol = kDefaultQuadTol,
                           long max_evals = kDefaultEvalBudget);

// (1/(v-u)) * integral of f over [u, v]; tol applies to the mean itself.
double integral_mean(const std::function<double(double)>& f, double u,
                     double v, double tol = kDefaultQuadTol,
                     long max_evals = kDefaultEvalBudget);

}  // namespace hhb
