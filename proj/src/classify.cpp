#include "hhb/classify.hpp"

#include <cmath>
#include <vector>

#include "hhb/errors.hpp"

namespace hhb {

const char* class_name(ConvexClass c) {
  switch (c) {
    case ConvexClass::Convex:
      return "convex";
    case ConvexClass::Concave:
      return "concave";
    case ConvexClass::SConvex:
      return "s-convex";
    case ConvexClass::SConcave:
      return "s-concave";
  }
  return "?";
}

ConvexityCertificate classify(const std::function<double(double)>& f,
                              const PositiveInterval& iv, ConvexClass cls,
                              std::optional<SParameter> s, int grid) {
  if (grid < 8) throw DomainError("classification grid must be at least 8");
  const bool s_class =
      cls == ConvexClass::SConvex || cls == ConvexClass::SConcave;
  if (s_class && !s)
    throw DomainError("s parameter required for the s-classes");
  if (!s_class && s)
    throw DomainError("s parameter only applies to the s-classes");
  const bool concave_side =
      cls == ConvexClass::Concave || cls == ConvexClass::SConcave;

  const int n = grid;
  std::vector<double> xs(n + 1), fx(n + 1), wt(n + 1), wu(n + 1);
  for (int i = 0; i <= n; ++i) {
    // Exact at the endpoints; dyadic grids stay exact throughout.
    xs[i] = iv.u() + (iv.v() - iv.u()) * (static_cast<double>(i) / n);
    fx[i] = f(xs[i]);
  }
  for (int k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / n;
    if (s_class) {
      wt[k] = std::pow(t, s->s());
      wu[k] = std::pow(1.0 - t, s->s());
    } else {
      wt[k] = t;
      wu[k] = 1.0 - t;
    }
  }

  ConvexityCertificate cert;
  cert.class_tested = cls;
  if (s) cert.s = s->s();
  cert.grid = grid;

  double worst = -HUGE_VAL;
  CounterexampleTriple argmax{0, 0, 0};
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / n;
        const double z = t * xs[i] + (1.0 - t) * xs[j];
        const double combo = wt[k] * fx[i] + wu[k] * fx[j];
        // convex side: f(z) <= combo; concave side: combo <= f(z)
        const double viol = concave_side ? combo - f(z) : f(z) - combo;
        if (viol > worst) {
          worst = viol;
          argmax = {xs[i], xs[j], t};
        }
      }
    }
  }

  cert.max_violation = std::max(0.0, worst);
  if (cert.max_violation > ConvexityCertificate::kRecordTol)
    cert.counterexample = argmax;
  return cert;
}

ConvexityCertificate classify(const FunctionModel& f,
                              const PositiveInterval& iv, ConvexClass cls,
                              std::optional<SParameter> s, int grid) {
  return classify([&f](double x) { return f.eval(x); }, iv, cls, std::move(s),
                  grid);
}

}  // namespace hhb
