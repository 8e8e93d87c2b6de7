#pragma once

#include <functional>
#include <optional>

#include "hhb/funcmodel.hpp"
#include "hhb/means.hpp"

namespace hhb {

enum class ConvexClass { Convex, Concave, SConvex, SConcave };

const char* class_name(ConvexClass c);

struct CounterexampleTriple {
  double x;
  double y;
  double t;
};

// Result of sampled falsification. A violation is a result, not an error.
struct ConvexityCertificate {
  static constexpr double kPassTol = 1e-9;     // "passes at this resolution"
  static constexpr double kRecordTol = 1e-12;  // counterexample kept above this

  ConvexClass class_tested = ConvexClass::Convex;
  std::optional<double> s;  // present for the s-classes
  int grid = 0;
  double max_violation = 0.0;  // worst positive violation, 0 if none
  std::optional<CounterexampleTriple> counterexample;

  bool passes() const { return max_violation <= kPassTol; }
};

// Tests the defining inequality of `cls` on all pairs (x_i, y_j) of a uniform
// (grid+1)-point grid over [u, v] and all t = k/grid. Reports the worst signed
// violation (clamped at 0) and the first maximizing triple in lexicographic
// (i, j, k) order. grid >= 8. s is required for the s-classes and rejected
// otherwise. Deterministic.
ConvexityCertificate classify(const std::function<double(double)>& f,
                              const PositiveInterval& iv, ConvexClass cls,
                              std::optional<SParameter> s, int grid = 32);

ConvexityCertificate classify(const FunctionModel& f,
                              const PositiveInterval& iv, ConvexClass cls,
                              std::optional<SParameter> s, int grid = 32);

}  // namespace hhb
