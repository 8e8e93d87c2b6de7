#include "hhb/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "hhb/errors.hpp"

namespace hhb {

HolderPair::HolderPair(double q) : q_(q) {
  if (!std::isfinite(q) || !(q > 1.0)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "conjugate exponents need q > 1 (got %g)",
                  q);
    throw DomainError(buf);
  }
  p_ = q / (q - 1.0);
}

PowerMeanExponent::PowerMeanExponent(double q) : q_(q) {
  if (!std::isfinite(q) || !(q >= 1.0)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "power-mean exponent needs q >= 1 (got %g)",
                  q);
    throw DomainError(buf);
  }
}

DerivativeBound::DerivativeBound(double m) : M(m) {
  if (!std::isfinite(m) || m < 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf,
                  "derivative bound must be finite and >= 0 (got %g)", m);
    throw DomainError(buf);
  }
}

DerivativeBound auto_derivative_bound(const FunctionModel& f,
                                      const PositiveInterval& iv) {
  double worst = 0.0;
  for (int i = 0; i <= 128; ++i) {
    const double x = iv.u() + i * (iv.v() - iv.u()) / 128.0;
    worst = std::max(worst, std::fabs(f.deriv(x)));
  }
  return DerivativeBound(worst);
}

namespace {

void require_x_in(const PositiveInterval& iv, double x) {
  if (!std::isfinite(x) || x < iv.u() || x > iv.v()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "x=%g outside [%g, %g]", x, iv.u(),
                  iv.v());
    throw DomainError(buf);
  }
}

struct XWeights {
  double w1;  // ((v-x)/(v-u))^2, scales the [x, v] segment
  double w2;  // ((x-u)/(v-u))^2, scales the [u, x] segment
};

XWeights weights(const PositiveInterval& iv, double x) {
  const double w = iv.width();
  const double a = (iv.v() - x) / w;
  const double b = (x - iv.u()) / w;
  return {a * a, b * b};
}

double abs_deriv(const FunctionModel& f, double y) {
  return std::fabs(f.deriv(y));
}

double holder_factor(const PositiveInterval& iv, const HolderPair& hq) {
  // (integral of the segment weight to the p-th power)^(1/p); both segments
  // sweep [u, v] so the factor is shared.
  return generalized_log_mean(iv, MeanExponent(hq.p()));
}

}  // namespace

double evaluate_lhs(const FunctionModel& f, const PositiveInterval& iv,
                    double x, const Tolerances& tol) {
  return std::fabs(lemma1_lhs(f, iv, x, tol));
}

double rhs_t1(const FunctionModel& f, const PositiveInterval& iv, double x) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double fx = abs_deriv(f, x);
  const double fu = abs_deriv(f, u);
  const double fv = abs_deriv(f, v);
  const double b1 = (2.0 * u + v) * fx + (u + 2.0 * v) * fv;
  const double b2 = (2.0 * v + u) * fx + (2.0 * u + v) * fu;
  return w1 * b1 / 6.0 + w2 * b2 / 6.0;
}

double rhs_t2(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double sp1 = s.s() + 1.0;
  const double D = sp1 * (s.s() + 2.0);
  const double fx = abs_deriv(f, x);
  const double fu = abs_deriv(f, u);
  const double fv = abs_deriv(f, v);
  const double b1 = (sp1 * u + v) * fx + (u + sp1 * v) * fv;
  const double b2 = (sp1 * v + u) * fx + (sp1 * u + v) * fu;
  return w1 * b1 / D + w2 * b2 / D;
}

double rhs_t3(const FunctionModel& f, const PositiveInterval& iv, double x,
              HolderPair hq) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double q = hq.q();
  const double lp = holder_factor(iv, hq);
  const double fxq = std::pow(abs_deriv(f, x), q);
  const double fuq = std::pow(abs_deriv(f, u), q);
  const double fvq = std::pow(abs_deriv(f, v), q);
  return w1 * lp * std::pow((fxq + fvq) / 2.0, 1.0 / q) +
         w2 * lp * std::pow((fxq + fuq) / 2.0, 1.0 / q);
}

double rhs_t4(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s, HolderPair hq) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double q = hq.q();
  const double sp1 = s.s() + 1.0;
  const double lp = holder_factor(iv, hq);
  const double fxq = std::pow(abs_deriv(f, x), q);
  const double fuq = std::pow(abs_deriv(f, u), q);
  const double fvq = std::pow(abs_deriv(f, v), q);
  return w1 * lp * std::pow((fxq + fvq) / sp1, 1.0 / q) +
         w2 * lp * std::pow((fxq + fuq) / sp1, 1.0 / q);
}

double rhs_t5(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s, PowerMeanExponent q) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double qq = q.q();
  const double sp1 = s.s() + 1.0;
  const double D = sp1 * (s.s() + 2.0);
  const double afac = std::pow(arithmetic_mean(iv), 1.0 - 1.0 / qq);
  const double dfac = std::pow(1.0 / D, 1.0 / qq);
  const double fxq = std::pow(abs_deriv(f, x), qq);
  const double fuq = std::pow(abs_deriv(f, u), qq);
  const double fvq = std::pow(abs_deriv(f, v), qq);
  const double b1 = (sp1 * u + v) * fxq + (u + sp1 * v) * fvq;
  const double b2 = (sp1 * v + u) * fxq + (sp1 * u + v) * fuq;
  return w1 * afac * dfac * std::pow(b1, 1.0 / qq) +
         w2 * afac * dfac * std::pow(b2, 1.0 / qq);
}

double rhs_t6(const FunctionModel& f, const PositiveInterval& iv, double x,
              PowerMeanExponent q) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double qq = q.q();
  const double afac = std::pow(arithmetic_mean(iv), 1.0 - 1.0 / qq);
  const double dfac = std::pow(1.0 / 6.0, 1.0 / qq);
  const double fxq = std::pow(abs_deriv(f, x), qq);
  const double fuq = std::pow(abs_deriv(f, u), qq);
  const double fvq = std::pow(abs_deriv(f, v), qq);
  const double b1 = (2.0 * u + v) * fxq + (u + 2.0 * v) * fvq;
  const double b2 = (2.0 * v + u) * fxq + (2.0 * u + v) * fuq;
  return w1 * afac * dfac * std::pow(b1, 1.0 / qq) +
         w2 * afac * dfac * std::pow(b2, 1.0 / qq);
}

double rhs_t7(const FunctionModel& f, const PositiveInterval& iv, double x,
              SParameter s, HolderPair hq) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double lp = holder_factor(iv, hq);
  const double fm1 = abs_deriv(f, 0.5 * (x + v));
  const double fm2 = abs_deriv(f, 0.5 * (x + u));
  return std::pow(2.0, (s.s() - 1.0) / hq.q()) * lp * (w1 * fm1 + w2 * fm2);
}

double rhs_t8(const FunctionModel& f, const PositiveInterval& iv, double x,
              HolderPair hq) {
  require_x_in(iv, x);
  const double u = iv.u(), v = iv.v();
  const auto [w1, w2] = weights(iv, x);
  const double lp = holder_factor(iv, hq);
  const double fm1 = abs_deriv(f, 0.5 * (x + v));
  const double fm2 = abs_deriv(f, 0.5 * (x + u));
  return lp * (w1 * fm1 + w2 * fm2);
}

namespace {

// Parameter policy per id. 'r' required, 'f' forbidden, 'o' optional.
struct IdSpec {
  const char* name;
  bool theorem;
  char s_mode;
  char q_mode;
  char m_mode;
  char q_kind;  // 'h' needs q > 1, 'p' needs q >= 1, '-' no q
  bool x_at_mid;  // corollaries: internal x is the midpoint (else endpoint)
  ConvexClass hyp;
  bool hyp_on_power;  // hypothesis class applies to |f'|^q, not |f'|
};

const IdSpec kSpecs[] = {
    {"t1", true, 'f', 'f', 'f', '-', false, ConvexClass::Convex, false},
    {"t2", true, 'r', 'f', 'f', '-', false, ConvexClass::SConvex, false},
    {"t3", true, 'f', 'r', 'f', 'h', false, ConvexClass::Convex, true},
    {"t4", true, 'r', 'r', 'f', 'h', false, ConvexClass::SConvex, true},
    {"t5", true, 'r', 'r', 'f', 'p', false, ConvexClass::SConvex, true},
    {"t6", true, 'f', 'r', 'f', 'p', false, ConvexClass::Convex, true},
    {"t7", true, 'r', 'r', 'f', 'h', false, ConvexClass::SConcave, true},
    {"t8", true, 'f', 'r', 'f', 'h', false, ConvexClass::Concave, true},
    {"c1", false, 'r', 'f', 'f', '-', true, ConvexClass::SConvex, false},
    {"c2", false, 'r', 'f', 'o', '-', true, ConvexClass::SConvex, false},
    {"c3i", false, 'r', 'r', 'f', 'h', false, ConvexClass::SConvex, true},
    {"c3ii_tight", false, 'r', 'r', 'f', 'h', true, ConvexClass::SConvex,
     true},
    {"c3ii_loose", false, 'r', 'r', 'f', 'h', true, ConvexClass::SConvex,
     true},
    {"c4i", false, 'r', 'r', 'f', 'p', false, ConvexClass::SConvex, true},
    {"c4ii", false, 'f', 'f', 'f', '-', false, ConvexClass::Convex, false},
    {"c4iii_tight", false, 'r', 'r', 'f', 'p', true, ConvexClass::SConvex,
     true},
    {"c4iii_loose", false, 'r', 'r', 'f', 'p', true, ConvexClass::SConvex,
     true},
    {"c5i", false, 'r', 'r', 'f', 'h', false, ConvexClass::SConcave, true},
    {"c5ii", false, 'r', 'r', 'f', 'h', true, ConvexClass::SConcave, true},
};

const IdSpec* find_spec(const std::string& id) {
  for (const IdSpec& sp : kSpecs)
    if (id == sp.name) return &sp;
  return nullptr;
}

const IdSpec& spec_or_throw(const std::string& id) {
  const IdSpec* sp = find_spec(id);
  if (!sp) throw DomainError("unknown bound id '" + id + "'");
  return *sp;
}

void check_param(const std::string& id, const char* pname, char mode,
                 bool present) {
  if (mode == 'r' && !present)
    throw DomainError(id + " requires " + pname);
  if (mode == 'f' && present)
    throw DomainError(id + " does not take " + pname);
}

void validate_params(const IdSpec& sp, const BoundParams& params) {
  const std::string id = sp.name;
  if (!sp.theorem && params.x)
    throw DomainError(id + " fixes x internally; do not pass x");
  check_param(id, "s", sp.s_mode, params.s.has_value());
  check_param(id, "q", sp.q_mode, params.q.has_value());
  check_param(id, "M", sp.m_mode, params.M.has_value());
  // Range checks happen in the parameter constructors.
  if (params.s) SParameter{*params.s};
  if (params.q) {
    if (sp.q_kind == 'h')
      HolderPair{*params.q};
    else
      PowerMeanExponent{*params.q};
  }
  if (params.M) DerivativeBound{*params.M};
}

double theorem_rhs(const std::string& id, const FunctionModel& f,
                   const PositiveInterval& iv, double x,
                   const BoundParams& params) {
  if (id == "t1") return rhs_t1(f, iv, x);
  if (id == "t2") return rhs_t2(f, iv, x, SParameter(*params.s));
  if (id == "t3") return rhs_t3(f, iv, x, HolderPair(*params.q));
  if (id == "t4")
    return rhs_t4(f, iv, x, SParameter(*params.s), HolderPair(*params.q));
  if (id == "t5")
    return rhs_t5(f, iv, x, SParameter(*params.s),
                  PowerMeanExponent(*params.q));
  if (id == "t6") return rhs_t6(f, iv, x, PowerMeanExponent(*params.q));
  if (id == "t7")
    return rhs_t7(f, iv, x, SParameter(*params.s), HolderPair(*params.q));
  if (id == "t8") return rhs_t8(f, iv, x, HolderPair(*params.q));
  throw DomainError("unknown theorem id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& bound_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const IdSpec& sp : kSpecs) out.emplace_back(sp.name);
    return out;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const IdSpec* sp = find_spec(id);
  return sp && sp->theorem;
}

bool is_bound_id(const std::string& id) { return find_spec(id) != nullptr; }

double rhs_corollary(const std::string& id, const FunctionModel& f,
                     const PositiveInterval& iv, const BoundParams& params) {
  const IdSpec& sp = spec_or_throw(id);
  if (sp.theorem)
    throw DomainError("'" + id + "' is a theorem id; use its rhs function");
  validate_params(sp, params);
  const double u = iv.u(), v = iv.v();
  const double mid = iv.midpoint();

  if (id == "c1") return rhs_t2(f, iv, mid, SParameter(*params.s));

  if (id == "c2") {
    const double sp1 = *params.s + 1.0;
    const DerivativeBound m =
        params.M ? DerivativeBound(*params.M) : auto_derivative_bound(f, iv);
    return m.M * (u + v) / (2.0 * sp1);
  }

  if (id == "c3i") {
    const HolderPair hq(*params.q);
    const double q = hq.q();
    const double sp1 = *params.s + 1.0;
    const double lp = holder_factor(iv, hq);
    const double fuq = std::pow(abs_deriv(f, u), q);
    const double fvq = std::pow(abs_deriv(f, v), q);
    return lp * std::pow((fvq + fuq) / sp1, 1.0 / q);
  }

  if (id == "c3ii_tight")
    return rhs_t4(f, iv, mid, SParameter(*params.s), HolderPair(*params.q));

  if (id == "c3ii_loose") {
    // c3ii_tight without the 1/(s+1) inside the power mean; always the
    // weaker (larger) of the pair.
    const HolderPair hq(*params.q);
    const double q = hq.q();
    const auto [w1, w2] = weights(iv, mid);
    const double lp = holder_factor(iv, hq);
    const double fmq = std::pow(abs_deriv(f, mid), q);
    const double fuq = std::pow(abs_deriv(f, u), q);
    const double fvq = std::pow(abs_deriv(f, v), q);
    return w1 * lp * std::pow(fmq + fvq, 1.0 / q) +
           w2 * lp * std::pow(fmq + fuq, 1.0 / q);
  }

  if (id == "c4i") {
    const PowerMeanExponent pq(*params.q);
    const double q = pq.q();
    const double sp1 = *params.s + 1.0;
    const double D = sp1 * (*params.s + 2.0);
    const double afac = std::pow(arithmetic_mean(iv), 1.0 - 1.0 / q);
    const double dfac = std::pow(1.0 / D, 1.0 / q);
    const double fuq = std::pow(abs_deriv(f, u), q);
    const double fvq = std::pow(abs_deriv(f, v), q);
    const double b = (sp1 * v + u) * fvq + (sp1 * u + v) * fuq;
    return afac * dfac * std::pow(b, 1.0 / q);
  }

  if (id == "c4ii") {
    const double fu = abs_deriv(f, u);
    const double fv = abs_deriv(f, v);
    return ((2.0 * v + u) * fv + (2.0 * u + v) * fu) / 6.0;
  }

  if (id == "c4iii_tight")
    return rhs_t5(f, iv, mid, SParameter(*params.s),
                  PowerMeanExponent(*params.q));

  if (id == "c4iii_loose") {
    // c4iii_tight without the (1/((s+1)(s+2)))^(1/q) factor.
    const PowerMeanExponent pq(*params.q);
    const double q = pq.q();
    const double sp1 = *params.s + 1.0;
    const auto [w1, w2] = weights(iv, mid);
    const double afac = std::pow(arithmetic_mean(iv), 1.0 - 1.0 / q);
    const double fmq = std::pow(abs_deriv(f, mid), q);
    const double fuq = std::pow(abs_deriv(f, u), q);
    const double fvq = std::pow(abs_deriv(f, v), q);
    const double b1 = (sp1 * u + v) * fmq + (u + sp1 * v) * fvq;
    const double b2 = (sp1 * v + u) * fmq + (sp1 * u + v) * fuq;
    return w1 * afac * std::pow(b1, 1.0 / q) +
           w2 * afac * std::pow(b2, 1.0 / q);
  }

  if (id == "c5i") {
    const HolderPair hq(*params.q);
    const double lp = holder_factor(iv, hq);
    return std::pow(2.0, (*params.s - 1.0) / hq.q()) * lp *
           abs_deriv(f, 0.5 * (v + u));
  }

  if (id == "c5ii")
    return rhs_t7(f, iv, mid, SParameter(*params.s), HolderPair(*params.q));

  throw DomainError("unknown corollary id '" + id + "'");
}

BoundReport check_bound(const std::string& id, const FunctionModel& f,
                        const PositiveInterval& iv, const BoundParams& params,
                        const Tolerances& tol, int classify_grid) {
  const IdSpec& sp = spec_or_throw(id);
  validate_params(sp, params);

  double x_eff;
  if (sp.theorem) {
    x_eff = params.x ? *params.x : iv.midpoint();
    require_x_in(iv, x_eff);
  } else {
    if (params.x)
      throw DomainError(id + " fixes x internally; do not pass x");
    x_eff = sp.x_at_mid ? iv.midpoint() : iv.v();
  }

  probe_derivative(f, iv.u(), iv.v());

  BoundReport r;
  r.id = id;
  r.u = iv.u();
  r.v = iv.v();
  r.x = x_eff;
  r.s = params.s;
  r.q = params.q;
  r.lhs = evaluate_lhs(f, iv, x_eff, tol);
  r.rhs = sp.theorem ? theorem_rhs(id, f, iv, x_eff, params)
                     : rhs_corollary(id, f, iv, params);
  r.margin = r.rhs - r.lhs;
  r.ratio = r.rhs != 0.0 ? r.lhs / r.rhs : 0.0;
  r.holds = r.lhs <= r.rhs + tol.compare;

  if (classify_grid > 0) {
    const double q = params.q.value_or(1.0);
    std::function<double(double)> g;
    if (sp.hyp_on_power && q != 1.0)
      g = [&f, q](double y) { return std::pow(std::fabs(f.deriv(y)), q); };
    else
      g = [&f](double y) { return std::fabs(f.deriv(y)); };
    std::optional<SParameter> cls_s;
    if (sp.hyp == ConvexClass::SConvex || sp.hyp == ConvexClass::SConcave)
      cls_s = SParameter(*params.s);
    r.hypothesis = classify(g, iv, sp.hyp, cls_s, classify_grid);
  }
  return r;
}

}  // namespace hhb
