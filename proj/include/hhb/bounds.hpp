#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhb/classify.hpp"
#include "hhb/hadamard.hpp"

namespace hhb {

// Conjugate exponents 1/p + 1/q = 1 with q > 1.
class HolderPair {
 public:
  explicit HolderPair(double q);
  double q() const { return q_; }
  double p() const { return p_; }

 private:
  double q_;
  double p_;
};

// Power-mean exponent q >= 1.
class PowerMeanExponent {
 public:
  explicit PowerMeanExponent(double q);
  double q() const { return q_; }

 private:
  double q_;
};

// Uniform bound on |f'| over the interval.
struct DerivativeBound {
  explicit DerivativeBound(double m);
  double M;
};

// Sampled max of |f'| on a 129-point grid of [u, v].
DerivativeBound auto_derivative_bound(const FunctionModel& f,
                                      const PositiveInterval& iv);

// |lemma1_lhs|: the quantity every bound in this module dominates.
double evaluate_lhs(const FunctionModel& f, const PositiveInterval& iv,
                    double x, const Tolerances& tol = {});

// Closed-form right-hand sides. Hypotheses on |f'| (or |f'|^q) are NOT
// enforced here; pair with classify() to certify them.
//   t1: |f'| convex            t2: |f'| s-convex
//   t3: |f'|^q convex, q>1     t4: |f'|^q s-convex, q>1   (Holder route)
//   t5: |f'|^q s-convex, q>=1  t6: t5 at s=1              (power-mean route)
//   t7: |f'|^q s-concave, q>1  t8: t7 at s=1
double rhs_t1(const FunctionModel& f, const PositiveInterval& iv, double x);
double rhs_t2(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s);
double rhs_t3(const FunctionModel& f, const PositiveInterval& iv, double x,
              HolderPair hq);
double rhs_t4(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s, HolderPair hq);
double rhs_t5(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s, PowerMeanExponent q);
double rhs_t6(const FunctionModel& f, const PositiveInterval& iv, double x,
              PowerMeanExponent q);
double rhs_t7(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s, HolderPair hq);
double rhs_t8(const FunctionModel& f, const PositiveInterval& iv, double x,
              HolderPair hq);

struct BoundParams {
  std::optional<double> x;
  std::optional<double> s;
  std::optional<double> q;
  std::optional<double> M;  // c2 only; sampled from f' when absent
};

struct BoundReport {
  std::string id;
  double u = 0.0, v = 0.0;
  double x = 0.0;  // effective x (corollaries fix it internally)
  std::optional<double> s;
  std::optional<double> q;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double ratio = 0.0;   // lhs/rhs, 0 when rhs == 0
  bool holds = false;
  std::optional<ConvexityCertificate> hypothesis;  // absent = unchecked
};

// All checkable ids: t1..t8 and the corollary ids c1, c2, c3i, c3ii_tight,
// c3ii_loose, c4i, c4ii, c4iii_tight, c4iii_loose, c5i, c5ii.
const std::vector<std::string>& bound_ids();
bool is_theorem_id(const std::string& id);
bool is_bound_id(const std::string& id);

// Corollary right-hand sides; x is fixed internally (midpoint for c1, c2,
// c3ii*, c4iii*, c5ii; endpoint for c3i, c4i, c4ii, c5i).
double rhs_corollary(const std::string& id, const FunctionModel& f,
                     const PositiveInterval& iv, const BoundParams& params);

// Validates parameters for `id`, probes f, computes both sides and the
// report; classify_grid > 0 additionally certifies the hypothesis class.
BoundReport check_bound(const std::string& id, const FunctionModel& f,
                        const PositiveInterval& iv, const BoundParams& params,
                        const Tolerances& tol = {}, int classify_grid = 0);

}  // namespace hhb
