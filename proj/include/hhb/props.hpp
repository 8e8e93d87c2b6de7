#pragma once

#include "hhb/bounds.hpp"

namespace hhb {

// Bounds between special means obtained by instantiating the corollaries with
// f = x^s (props 1-3) or f = sin on (0, pi) (prop 4). The closed forms are the
// doubled midpoint-corollary identities, so each report's lhs/rhs equals
// exactly twice the corresponding corollary evaluation.
struct PropReport {
  int id = 0;
  double u = 0.0, v = 0.0;
  std::optional<double> s;
  std::optional<double> q;
  double lhs = 0.0;
  double rhs = 0.0;
  // Prop 2 only: the alternative prefactor (s/(s+1))^(1/q) as printed in some
  // statements of the bound. It disagrees with the corollary substitution
  // s*(1/(s+1))^(1/q) unless s=1 or q=1; the substitution value is `rhs`.
  std::optional<double> rhs_as_printed;
  double margin = 0.0;
  double ratio = 0.0;
  bool holds = false;
  std::optional<ConvexityCertificate> hypothesis;
};

// |(s-1)L_s^s + A^s| <= s/(s+1) A^s + s/(s+2) A(u^s,v^s)
//                        + s G^2/((s+1)(s+2)) A(u^(s-2),v^(s-2)).
// Equality iff s = 1.
PropReport prop1(const PositiveInterval& iv, SParameter s,
                 const Tolerances& tol = {}, int classify_grid = 0);

// Same lhs vs (L_p/2) s (1/(s+1))^(1/q) [ (A^((s-1)q) + v^((s-1)q))^(1/q)
//                                       + (A^((s-1)q) + u^((s-1)q))^(1/q) ].
PropReport prop2(const PositiveInterval& iv, SParameter s, HolderPair q,
                 const Tolerances& tol = {}, int classify_grid = 0);

// Same lhs vs (s^q A^(q-1) / ((s+1)(s+2) 2^q))^(1/q) *
//   [ (((s+1)u+v) A^((s-1)q) + ((s+1)v+u) v^((s-1)q))^(1/q)
//   + (((s+1)v+u) A^((s-1)q) + ((s+1)u+v) u^((s-1)q))^(1/q) ].
PropReport prop3(const PositiveInterval& iv, SParameter s, PowerMeanExponent q,
                 const Tolerances& tol = {}, int classify_grid = 0);

// f = sin, 0 < u < v < pi:
// |(v sin v - u sin u + 2 cos v - 2 cos u)/(v-u) + sin(A)|
//   <= (L_p/2) [ |cos((u+3v)/4)| + |cos((3u+v)/4)| ].
PropReport prop4(const PositiveInterval& iv, HolderPair q,
                 const Tolerances& tol = {}, int classify_grid = 0);

}  // namespace hhb
