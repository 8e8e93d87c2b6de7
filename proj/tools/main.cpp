#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhb/bounds.hpp"
#include "hhb/props.hpp"
#include "hhb/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : "";
}

std::string hyp_status(const std::optional<hhb::ConvexityCertificate>& c) {
  if (!c) return "unchecked";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s@%d", c->passes() ? "pass" : "fail",
                c->grid);
  return buf;
}

ordered_json cert_json(const hhb::ConvexityCertificate& c) {
  ordered_json j;
  j["class"] = hhb::class_name(c.class_tested);
  if (c.s)
    j["s"] = *c.s;
  else
    j["s"] = nullptr;
  j["grid"] = c.grid;
  j["max_violation"] = c.max_violation;
  if (c.counterexample) {
    j["counterexample"] = {{"x", c.counterexample->x},
                           {"y", c.counterexample->y},
                           {"t", c.counterexample->t}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["passes"] = c.passes();
  return j;
}

void print_cert_text(const hhb::ConvexityCertificate& c) {
  std::printf("  hypothesis: %s%s, grid %d, max violation %s -> %s\n",
              hhb::class_name(c.class_tested),
              c.s ? (" (s=" + fmt(*c.s) + ")").c_str() : "", c.grid,
              fmt(c.max_violation).c_str(), c.passes() ? "pass" : "FAIL");
  if (c.counterexample)
    std::printf("  counterexample: x=%s y=%s t=%s\n",
                fmt(c.counterexample->x).c_str(),
                fmt(c.counterexample->y).c_str(),
                fmt(c.counterexample->t).c_str());
}

// Shared numeric/output flags. --seed is accepted but currently unused; it is
// reserved so scripted callers do not break when randomized exploration modes
// appear.
struct Common {
  double tol = 1e-8;
  double quad_tol = hhb::kDefaultQuadTol;
  long max_evals = hhb::kDefaultEvalBudget;
  std::string out = "text";
  std::string path;
  unsigned long long seed = 0;

  hhb::Tolerances tolerances() const { return {tol, quad_tol, max_evals}; }
};

void add_common(CLI::App* sub, Common& c, bool with_path) {
  sub->add_option("--tol", c.tol, "comparison slack (default 1e-8)");
  sub->add_option("--quad-tol", c.quad_tol,
                  "absolute quadrature tolerance (default 1e-10)");
  sub->add_option("--max-evals", c.max_evals,
                  "quadrature evaluation budget (default 100000)");
  sub->add_option("--out", c.out, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  if (with_path)
    sub->add_option("--path", c.path, "write output to this file");
  sub->add_option("--seed", c.seed, "reserved for future randomized modes");
}

void emit(const Common& c, const std::string& body) {
  if (c.path.empty()) {
    std::fputs(body.c_str(), stdout);
    return;
  }
  std::ofstream out(c.path, std::ios::binary);
  if (!out) throw hhb::Error("cannot open output file '" + c.path + "'");
  out << body;
}

// --- means -------------------------------------------------------------

struct MeansArgs {
  Common common;
  double u = 0, v = 0, p = 0;
  bool has_p = false;
};

int run_means(const MeansArgs& a) {
  hhb::PositiveInterval iv(a.u, a.v);
  const double am = hhb::arithmetic_mean(iv);
  const double gm = hhb::geometric_mean(iv);
  const double im = hhb::identric_mean(iv);
  std::optional<double> lp;
  if (a.has_p) lp = hhb::generalized_log_mean(iv, hhb::MeanExponent(a.p));

  if (a.common.out == "json") {
    ordered_json j;
    j["u"] = a.u;
    j["v"] = a.v;
    j["A"] = am;
    j["G"] = gm;
    j["I"] = im;
    if (lp) {
      j["p"] = a.p;
      j["L_p"] = *lp;
    }
    emit(a.common, j.dump(2) + "\n");
  } else {
    std::string body;
    body += "A = " + fmt(am) + "\n";
    body += "G = " + fmt(gm) + "\n";
    body += "I = " + fmt(im) + "\n";
    if (lp) body += "L_" + fmt(a.p) + " = " + fmt(*lp) + "\n";
    emit(a.common, body);
  }
  return 0;
}

// --- identity ----------------------------------------------------------

struct IdentityArgs {
  Common common;
  std::string fn;
  double u = 0, v = 0, x = 0;
  bool has_x = false;
};

int run_identity(const IdentityArgs& a) {
  const hhb::FunctionModel f = hhb::FunctionModel::parse(a.fn);
  hhb::PositiveInterval iv(a.u, a.v);
  const double x = a.has_x ? a.x : iv.midpoint();
  const hhb::IdentityReport r =
      hhb::verify_identity(f, iv, x, a.common.tolerances());

  if (a.common.out == "json") {
    ordered_json j;
    j["fn"] = f.str();
    j["u"] = a.u;
    j["v"] = a.v;
    j["x"] = x;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["tol"] = r.tol;
    j["holds"] = r.holds;
    emit(a.common, j.dump(2) + "\n");
  } else {
    std::string body;
    body += "identity check: f(x) = " + f.str() + " on [" + fmt(a.u) + ", " +
            fmt(a.v) + "], x = " + fmt(x) + "\n";
    body += "  boundary route = " + fmt(r.lhs) + "\n";
    body += "  integral route = " + fmt(r.rhs) + "\n";
    body += "  residual       = " + fmt(r.residual) + " (tol " + fmt(r.tol) +
            ")\n";
    body += std::string("  holds: ") + (r.holds ? "yes" : "NO") + "\n";
    emit(a.common, body);
  }
  return r.holds ? 0 : 1;
}

// --- classic (midpoint / endpoint chains) -------------------------------

struct ClassicArgs {
  Common common;
  std::string fn;
  double u = 0, v = 0, s = 0;
  bool has_s = false;
  bool reversed = false;
};

int run_classic(const ClassicArgs& a) {
  const hhb::FunctionModel f = hhb::FunctionModel::parse(a.fn);
  const hhb::Direction dir =
      a.reversed ? hhb::Direction::Reversed : hhb::Direction::Forward;
  const hhb::ChainReport r =
      a.has_s ? hhb::shh_check(f, a.u, a.v, hhb::SParameter(a.s),
                               a.common.tolerances(), dir)
              : hhb::hh_check(f, a.u, a.v, a.common.tolerances(), dir);
  const char* rel = a.reversed ? ">=" : "<=";

  if (a.common.out == "json") {
    ordered_json j;
    j["fn"] = f.str();
    j["u"] = a.u;
    j["v"] = a.v;
    if (a.has_s)
      j["s"] = a.s;
    else
      j["s"] = nullptr;
    j["reversed"] = a.reversed;
    j["left"] = r.left;
    j["middle"] = r.middle;
    j["right"] = r.right;
    j["left_holds"] = r.left_holds;
    j["right_holds"] = r.right_holds;
    j["holds"] = r.holds;
    emit(a.common, j.dump(2) + "\n");
  } else {
    std::string body;
    body += "chain: f(x) = " + f.str() + " on [" + fmt(a.u) + ", " +
            fmt(a.v) + "]";
    if (a.has_s) body += ", s = " + fmt(a.s);
    body += a.reversed ? " (reversed)\n" : "\n";
    body += "  " + fmt(r.left) + " " + rel + " " + fmt(r.middle) + " " + rel +
            " " + fmt(r.right) + "\n";
    body += std::string("  left:  ") + (r.left_holds ? "holds" : "FAILS") +
            "\n";
    body += std::string("  right: ") + (r.right_holds ? "holds" : "FAILS") +
            "\n";
    emit(a.common, body);
  }
  return r.holds ? 0 : 1;
}

// --- check / sweep -------------------------------------------------------

const char kCsvHeader[] =
    "theorem_id,u,v,x,s,q,lhs,rhs,margin,ratio,holds,hypothesis_status";

std::string csv_row(const hhb::BoundReport& r) {
  std::string row;
  row += r.id;
  row += ',' + fmt(r.u) + ',' + fmt(r.v) + ',' + fmt(r.x);
  row += ',' + fmt_opt(r.s) + ',' + fmt_opt(r.q);
  row += ',' + fmt(r.lhs) + ',' + fmt(r.rhs) + ',' + fmt(r.margin) + ',' +
         fmt(r.ratio);
  row += std::string(",") + (r.holds ? "true" : "false");
  row += ',' + hyp_status(r.hypothesis);
  return row;
}

ordered_json report_json(const hhb::BoundReport& r) {
  ordered_json j;
  j["theorem_id"] = r.id;
  j["u"] = r.u;
  j["v"] = r.v;
  j["x"] = r.x;
  if (r.s)
    j["s"] = *r.s;
  else
    j["s"] = nullptr;
  if (r.q)
    j["q"] = *r.q;
  else
    j["q"] = nullptr;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["ratio"] = r.ratio;
  j["holds"] = r.holds;
  if (r.hypothesis)
    j["hypothesis"] = cert_json(*r.hypothesis);
  else
    j["hypothesis"] = "unchecked";
  return j;
}

struct CheckArgs {
  Common common;
  std::string id;
  std::string fn;
  double u = 0, v = 0;
  double x = 0, s = 0, q = 0, M = 0;
  bool has_x = false, has_s = false, has_q = false, has_m = false;
  bool classify = false;
  int grid = 32;
};

int run_check(const CheckArgs& a) {
  const hhb::FunctionModel f = hhb::FunctionModel::parse(a.fn);
  hhb::PositiveInterval iv(a.u, a.v);
  hhb::BoundParams params;
  if (a.has_x) params.x = a.x;
  if (a.has_s) params.s = a.s;
  if (a.has_q) params.q = a.q;
  if (a.has_m) params.M = a.M;
  const hhb::BoundReport r =
      hhb::check_bound(a.id, f, iv, params, a.common.tolerances(),
                       a.classify ? a.grid : 0);

  if (a.common.out == "json") {
    emit(a.common, report_json(r).dump(2) + "\n");
  } else if (a.common.out == "csv") {
    std::string body = std::string("# ") + hhb::kToolName + " " +
                       hhb::kToolVersion + "\n" + kCsvHeader + "\n";
    body += csv_row(r) + "\n";
    emit(a.common, body);
  } else {
    std::string body;
    body += "bound " + r.id + ": f(x) = " + f.str() + " on [" + fmt(r.u) +
            ", " + fmt(r.v) + "], x = " + fmt(r.x);
    if (r.s) body += ", s = " + fmt(*r.s);
    if (r.q) body += ", q = " + fmt(*r.q);
    body += "\n";
    body += "  lhs    = " + fmt(r.lhs) + "\n";
    body += "  rhs    = " + fmt(r.rhs) + "\n";
    body += "  margin = " + fmt(r.margin) + "\n";
    body += "  ratio  = " + fmt(r.ratio) + "\n";
    emit(a.common, body);
    if (r.hypothesis)
      print_cert_text(*r.hypothesis);
    else
      std::printf("  hypothesis: unchecked\n");
    std::printf("  holds: %s\n", r.holds ? "yes" : "NO");
  }
  return r.holds ? 0 : 1;
}

// Inclusive "start:stop:count" axis; count 1 pins the axis at `start`.
std::vector<double> parse_axis(const std::string& text, const char* what) {
  double start = 0, stop = 0;
  long count = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &start, &stop, &count,
                  &extra) != 3)
    throw hhb::DomainError(std::string("bad ") + what +
                           " axis '" + text + "' (want start:stop:count)");
  if (count < 1)
    throw hhb::DomainError(std::string("empty ") + what + " axis in '" +
                           text + "'");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    pts.push_back(start);
    return pts;
  }
  for (long i = 0; i < count; ++i)
    pts.push_back(start + (stop - start) * static_cast<double>(i) /
                              static_cast<double>(count - 1));
  return pts;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double val = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      pts.push_back(val);
    } catch (const std::exception&) {
      throw hhb::DomainError(std::string("bad ") + what + " entry '" + item +
                             "'");
    }
  }
  if (pts.empty())
    throw hhb::DomainError(std::string("empty ") + what + " list");
  return pts;
}

struct SweepArgs {
  Common common;
  std::string id;
  std::string fn;
  double u = 0, v = 0;
  bool has_u = false, has_v = false;
  std::string u_grid, v_grid, s_grid, q_list;
  int x_count = 1;
  bool classify = false;
  int grid = 32;
};

int run_sweep(const SweepArgs& a) {
  if (!hhb::is_theorem_id(a.id))
    throw hhb::DomainError("sweep supports theorem ids t1..t8 (got '" +
                           a.id + "')");
  const hhb::FunctionModel f = hhb::FunctionModel::parse(a.fn);
  if (a.x_count < 1) throw hhb::DomainError("empty x axis (--x-count < 1)");

  std::vector<double> us, vs;
  if (!a.u_grid.empty())
    us = parse_axis(a.u_grid, "u");
  else if (a.has_u)
    us = {a.u};
  else
    throw hhb::DomainError("sweep needs --u or --u-grid");
  if (!a.v_grid.empty())
    vs = parse_axis(a.v_grid, "v");
  else if (a.has_v)
    vs = {a.v};
  else
    throw hhb::DomainError("sweep needs --v or --v-grid");

  std::optional<std::vector<double>> ss, qs;
  if (!a.s_grid.empty()) ss = parse_axis(a.s_grid, "s");
  if (!a.q_list.empty()) qs = parse_list(a.q_list, "q");

  // Validate the whole grid up front so a single bad point rejects the sweep
  // before any output is written.
  for (double u : us)
    for (double v : vs) hhb::PositiveInterval{u, v};

  const hhb::Tolerances tol = a.common.tolerances();
  std::vector<hhb::BoundReport> rows;
  for (double u : us) {
    for (double v : vs) {
      const hhb::PositiveInterval iv(u, v);
      for (int k = 0; k < a.x_count; ++k) {
        const double x =
            a.x_count == 1
                ? iv.midpoint()
                : u + (v - u) * static_cast<double>(k) /
                          static_cast<double>(a.x_count - 1);
        const std::size_t n_s = ss ? ss->size() : 1;
        const std::size_t n_q = qs ? qs->size() : 1;
        for (std::size_t i = 0; i < n_s; ++i) {
          for (std::size_t j = 0; j < n_q; ++j) {
            hhb::BoundParams params;
            params.x = x;
            if (ss) params.s = (*ss)[i];
            if (qs) params.q = (*qs)[j];
            rows.push_back(hhb::check_bound(a.id, f, iv, params, tol,
                                            a.classify ? a.grid : 0));
          }
        }
      }
    }
  }

  bool all_hold = true;
  double min_ratio = HUGE_VAL, max_ratio = -HUGE_VAL, sum_ratio = 0.0;
  for (const hhb::BoundReport& r : rows) {
    all_hold = all_hold && r.holds;
    min_ratio = std::min(min_ratio, r.ratio);
    max_ratio = std::max(max_ratio, r.ratio);
    sum_ratio += r.ratio;
  }
  const double mean_ratio = sum_ratio / static_cast<double>(rows.size());

  if (a.common.out == "json") {
    ordered_json j;
    j["tool"] = hhb::kToolName;
    j["version"] = hhb::kToolVersion;
    j["rows"] = ordered_json::array();
    for (const hhb::BoundReport& r : rows) j["rows"].push_back(report_json(r));
    emit(a.common, j.dump(2) + "\n");
  } else {
    std::string body = std::string("# ") + hhb::kToolName + " " +
                       hhb::kToolVersion + "\n" + kCsvHeader + "\n";
    for (const hhb::BoundReport& r : rows) body += csv_row(r) + "\n";
    emit(a.common, body);
  }
  std::printf("rows=%zu holds=%s min_ratio=%s mean_ratio=%s max_ratio=%s\n",
              rows.size(), all_hold ? "all" : "NOT-ALL",
              fmt(min_ratio).c_str(), fmt(mean_ratio).c_str(),
              fmt(max_ratio).c_str());
  return all_hold ? 0 : 1;
}

// --- prop ----------------------------------------------------------------

struct PropArgs {
  Common common;
  int id = 0;
  double u = 0, v = 0, s = 0, q = 0;
  bool has_s = false, has_q = false;
  bool classify = false;
  int grid = 32;
};

int run_prop(const PropArgs& a) {
  hhb::PositiveInterval iv(a.u, a.v);
  const hhb::Tolerances tol = a.common.tolerances();
  const int cgrid = a.classify ? a.grid : 0;

  auto need = [&](bool have, const char* flag) {
    if (!have)
      throw hhb::DomainError("prop " + std::to_string(a.id) + " requires " +
                             flag);
  };
  auto forbid = [&](bool have, const char* flag) {
    if (have)
      throw hhb::DomainError("prop " + std::to_string(a.id) +
                             " does not take " + flag);
  };

  hhb::PropReport r;
  switch (a.id) {
    case 1:
      need(a.has_s, "--s");
      forbid(a.has_q, "--q");
      r = hhb::prop1(iv, hhb::SParameter(a.s), tol, cgrid);
      break;
    case 2:
      need(a.has_s, "--s");
      need(a.has_q, "--q");
      r = hhb::prop2(iv, hhb::SParameter(a.s), hhb::HolderPair(a.q), tol,
                     cgrid);
      break;
    case 3:
      need(a.has_s, "--s");
      need(a.has_q, "--q");
      r = hhb::prop3(iv, hhb::SParameter(a.s), hhb::PowerMeanExponent(a.q),
                     tol, cgrid);
      break;
    case 4:
      forbid(a.has_s, "--s");
      need(a.has_q, "--q");
      r = hhb::prop4(iv, hhb::HolderPair(a.q), tol, cgrid);
      break;
    default:
      throw hhb::DomainError("prop id must be 1..4");
  }

  if (a.common.out == "json") {
    ordered_json j;
    j["prop"] = r.id;
    j["u"] = r.u;
    j["v"] = r.v;
    if (r.s)
      j["s"] = *r.s;
    else
      j["s"] = nullptr;
    if (r.q)
      j["q"] = *r.q;
    else
      j["q"] = nullptr;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.rhs_as_printed) j["rhs_as_printed"] = *r.rhs_as_printed;
    j["margin"] = r.margin;
    j["ratio"] = r.ratio;
    j["holds"] = r.holds;
    if (r.hypothesis)
      j["hypothesis"] = cert_json(*r.hypothesis);
    else
      j["hypothesis"] = "unchecked";
    emit(a.common, j.dump(2) + "\n");
  } else {
    std::string body;
    body += "prop " + std::to_string(r.id) + " on [" + fmt(r.u) + ", " +
            fmt(r.v) + "]";
    if (r.s) body += ", s = " + fmt(*r.s);
    if (r.q) body += ", q = " + fmt(*r.q);
    body += "\n";
    body += "  lhs    = " + fmt(r.lhs) + "\n";
    if (r.rhs_as_printed) {
      body += "  rhs_corollary_substitution = " + fmt(r.rhs) + "\n";
      body += "  rhs_as_printed             = " + fmt(*r.rhs_as_printed) +
              "\n";
      body +=
          "  note: the printed prefactor (s/(s+1))^(1/q) disagrees with the "
          "corollary substitution s*(1/(s+1))^(1/q) unless s=1 or q=1; the "
          "substitution value is used for the verdict\n";
    } else {
      body += "  rhs    = " + fmt(r.rhs) + "\n";
    }
    body += "  margin = " + fmt(r.margin) + "\n";
    body += "  ratio  = " + fmt(r.ratio) + "\n";
    emit(a.common, body);
    if (r.hypothesis)
      print_cert_text(*r.hypothesis);
    else
      std::printf("  hypothesis: unchecked\n");
    std::printf("  holds: %s\n", r.holds ? "yes" : "NO");
  }
  return r.holds ? 0 : 1;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  Common common;
  std::string fn;
  std::string cls;
  double u = 0, v = 0, s = 0;
  bool has_s = false;
  int grid = 32;
};

int run_classify(const ClassifyArgs& a) {
  const hhb::FunctionModel f = hhb::FunctionModel::parse(a.fn);
  hhb::PositiveInterval iv(a.u, a.v);
  hhb::ConvexClass cls;
  if (a.cls == "convex")
    cls = hhb::ConvexClass::Convex;
  else if (a.cls == "concave")
    cls = hhb::ConvexClass::Concave;
  else if (a.cls == "s-convex")
    cls = hhb::ConvexClass::SConvex;
  else if (a.cls == "s-concave")
    cls = hhb::ConvexClass::SConcave;
  else
    throw hhb::DomainError("unknown class '" + a.cls + "'");
  std::optional<hhb::SParameter> s;
  if (a.has_s) s = hhb::SParameter(a.s);
  hhb::probe_values(f, iv.u(), iv.v());
  const hhb::ConvexityCertificate cert = hhb::classify(f, iv, cls, s, a.grid);

  if (a.common.out == "json") {
    ordered_json j;
    j["fn"] = f.str();
    j["u"] = a.u;
    j["v"] = a.v;
    j["certificate"] = cert_json(cert);
    emit(a.common, j.dump(2) + "\n");
  } else {
    std::printf("classify: f(x) = %s on [%s, %s]\n", f.str().c_str(),
                fmt(a.u).c_str(), fmt(a.v).c_str());
    print_cert_text(cert);
    std::printf("  verdict: %s at grid %d\n",
                cert.passes() ? "passes" : "violated", cert.grid);
  }
  return cert.passes() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard-type integral inequalities: evaluate, verify, sweep",
               hhb::kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hhb::kToolName) + " " +
                                        hhb::kToolVersion);

  MeansArgs means_args;
  CLI::App* means = app.add_subcommand(
      "means", "arithmetic / geometric / identric / generalized log means");
  means->add_option("--u", means_args.u, "left endpoint")->required();
  means->add_option("--v", means_args.v, "right endpoint")->required();
  CLI::Option* means_p =
      means->add_option("--p", means_args.p, "exponent for L_p (not -1 or 0)");
  add_common(means, means_args.common, true);

  IdentityArgs id_args;
  CLI::App* identity = app.add_subcommand(
      "identity", "verify the weighted boundary-vs-integral identity");
  identity->add_option("--fn", id_args.fn, "function expression")->required();
  identity->add_option("--u", id_args.u, "left endpoint")->required();
  identity->add_option("--v", id_args.v, "right endpoint")->required();
  CLI::Option* id_x =
      identity->add_option("--x", id_args.x, "interior point (default mid)");
  add_common(identity, id_args.common, true);

  ClassicArgs cl_args;
  CLI::App* classic = app.add_subcommand(
      "classic", "midpoint <= integral mean <= endpoint-average chains");
  classic->add_option("--fn", cl_args.fn, "function expression")->required();
  classic->add_option("--u", cl_args.u, "left endpoint (>= 0)")->required();
  classic->add_option("--v", cl_args.v, "right endpoint")->required();
  CLI::Option* cl_s =
      classic->add_option("--s", cl_args.s, "use the s-variant chain");
  classic->add_flag("--reversed", cl_args.reversed,
                    "check the reversed (concave) chain");
  add_common(classic, cl_args.common, true);

  CheckArgs ck_args;
  CLI::App* check =
      app.add_subcommand("check", "evaluate one bound (t1..t8, c1..c5ii)");
  check->add_option("--theorem,--id", ck_args.id, "bound id")->required();
  check->add_option("--fn", ck_args.fn, "function expression")->required();
  check->add_option("--u", ck_args.u, "left endpoint")->required();
  check->add_option("--v", ck_args.v, "right endpoint")->required();
  CLI::Option* ck_x =
      check->add_option("--x", ck_args.x, "interior point (theorems only)");
  CLI::Option* ck_s = check->add_option("--s", ck_args.s, "s parameter");
  CLI::Option* ck_q = check->add_option("--q", ck_args.q, "exponent q");
  CLI::Option* ck_m =
      check->add_option("--M", ck_args.M, "derivative bound (c2 only)");
  check->add_flag("--classify", ck_args.classify,
                  "certify the hypothesis class on a grid");
  check->add_option("--grid", ck_args.grid, "classification grid (default 32)");
  add_common(check, ck_args.common, true);

  SweepArgs sw_args;
  CLI::App* sweep =
      app.add_subcommand("sweep", "grid-evaluate a theorem, write CSV/JSON");
  sweep->add_option("--theorem,--id", sw_args.id, "theorem id (t1..t8)")
      ->required();
  sweep->add_option("--fn", sw_args.fn, "function expression")->required();
  CLI::Option* sw_u = sweep->add_option("--u", sw_args.u, "left endpoint");
  CLI::Option* sw_v = sweep->add_option("--v", sw_args.v, "right endpoint");
  sweep->add_option("--u-grid", sw_args.u_grid, "u axis start:stop:count");
  sweep->add_option("--v-grid", sw_args.v_grid, "v axis start:stop:count");
  sweep->add_option("--x-count", sw_args.x_count,
                    "points across [u, v] (1 = midpoint)");
  sweep->add_option("--s-grid", sw_args.s_grid, "s axis start:stop:count");
  sweep->add_option("--q-list", sw_args.q_list, "comma-separated q values");
  sweep->add_flag("--classify", sw_args.classify,
                  "certify the hypothesis per row");
  sweep->add_option("--grid", sw_args.grid, "classification grid (default 32)");
  add_common(sweep, sw_args.common, true);
  sw_args.common.out = "csv";

  PropArgs pr_args;
  CLI::App* prop =
      app.add_subcommand("prop", "special-means bounds for f=x^s and f=sin");
  prop->add_option("--id", pr_args.id, "proposition id (1..4)")->required();
  prop->add_option("--u", pr_args.u, "left endpoint")->required();
  prop->add_option("--v", pr_args.v, "right endpoint")->required();
  CLI::Option* pr_s = prop->add_option("--s", pr_args.s, "s parameter");
  CLI::Option* pr_q = prop->add_option("--q", pr_args.q, "exponent q");
  prop->add_flag("--classify", pr_args.classify,
                 "certify the generating function's derivative class");
  prop->add_option("--grid", pr_args.grid, "classification grid (default 32)");
  add_common(prop, pr_args.common, true);

  ClassifyArgs cf_args;
  CLI::App* classify = app.add_subcommand(
      "classify", "sampled convexity falsification for a function");
  classify->add_option("--fn", cf_args.fn, "function expression")->required();
  classify->add_option("--u", cf_args.u, "left endpoint")->required();
  classify->add_option("--v", cf_args.v, "right endpoint")->required();
  classify
      ->add_option("--class", cf_args.cls,
                   "convex | concave | s-convex | s-concave")
      ->required();
  CLI::Option* cf_s = classify->add_option("--s", cf_args.s, "s parameter");
  classify->add_option("--grid", cf_args.grid, "grid size (default 32)");
  add_common(classify, cf_args.common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (means->parsed()) {
      means_args.has_p = means_p->count() > 0;
      return run_means(means_args);
    }
    if (identity->parsed()) {
      id_args.has_x = id_x->count() > 0;
      return run_identity(id_args);
    }
    if (classic->parsed()) {
      cl_args.has_s = cl_s->count() > 0;
      return run_classic(cl_args);
    }
    if (check->parsed()) {
      ck_args.has_x = ck_x->count() > 0;
      ck_args.has_s = ck_s->count() > 0;
      ck_args.has_q = ck_q->count() > 0;
      ck_args.has_m = ck_m->count() > 0;
      return run_check(ck_args);
    }
    if (sweep->parsed()) {
      sw_args.has_u = sw_u->count() > 0;
      sw_args.has_v = sw_v->count() > 0;
      return run_sweep(sw_args);
    }
    if (prop->parsed()) {
      pr_args.has_s = pr_s->count() > 0;
      pr_args.has_q = pr_q->count() > 0;
      return run_prop(pr_args);
    }
    if (classify->parsed()) {
      cf_args.has_s = cf_s->count() > 0;
      return run_classify(cf_args);
    }
  } catch (const hhb::ParseError& e) {
    std::fprintf(stderr, "error: %s (at offset %zu)\n", e.what(), e.offset());
    return 2;
  } catch (const hhb::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
