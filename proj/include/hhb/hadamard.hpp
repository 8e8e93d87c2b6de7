#pragma once

#include "hhb/funcmodel.hpp"
#include "hhb/means.hpp"
#include "hhb/quadrature.hpp"

namespace hhb {

// Tolerance bundle threaded through every check: `compare` is the inequality
// slack, `quadrature` the absolute integration tolerance.
struct Tolerances {
  double compare = 1e-8;
  double quadrature = kDefaultQuadTol;
  long max_evals = kDefaultEvalBudget;
};

// Reversed flips every comparison in the chain (concave case).
enum class Direction { Forward, Reversed };

// One midpoint <= mean <= endpoint-average chain evaluation.
struct ChainReport {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
  bool left_holds = false;   // left vs middle
  bool right_holds = false;  // middle vs right
  bool holds = false;
};

// f((u+v)/2) <= integral mean <= (f(u)+f(v))/2. Unlike the rest of the
// library these two accept u >= 0: the sharpness witness for the s-variant
// lives on [0, 1].
ChainReport hh_check(const FunctionModel& f, double u, double v,
                     const Tolerances& tol = {},
                     Direction dir = Direction::Forward);

// 2^(s-1) f((u+v)/2) <= integral mean <= (f(u)+f(v))/(s+1).
ChainReport shh_check(const FunctionModel& f, double u, double v, SParameter s,
                      const Tolerances& tol = {},
                      Direction dir = Direction::Forward);

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  bool holds = false;
};

// Signed gap between the x-weighted boundary term
// [(v-x)(v f(v) - u f(x)) + (x-u)(v f(x) - u f(u))]/(v-u)^2 and the integral
// mean of f. x must lie in [u, v].
double lemma1_lhs(const FunctionModel& f, const PositiveInterval& iv, double x,
                  const Tolerances& tol = {});

// The same gap written as two weighted derivative integrals over t in [0, 1]:
// ((v-x)/(v-u))^2 * I[(tu+(1-t)v) f'(tx+(1-t)v)] +
// ((x-u)/(v-u))^2 * I[(tv+(1-t)u) f'(tx+(1-t)u)].
double lemma1_rhs(const FunctionModel& f, const PositiveInterval& iv, double x,
                  const Tolerances& tol = {});

// Evaluates both routes and reports the residual; holds iff the residual is
// within tol.compare.
IdentityReport verify_identity(const FunctionModel& f,
                               const PositiveInterval& iv, double x,
                               const Tolerances& tol = {});

}  // namespace hhb
