#include "run_report.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "cpbih/error.hpp"
#include "suites.hpp"

namespace cpbih::cli {

namespace {

struct CommandInfo {
  double rho;
  int grid;
  std::set<std::string> cases;  ///< empty: --case not accepted
  bool branch;                  ///< accepts --branch
  std::map<std::string, double> tolerances;
};

const std::map<std::string, CommandInfo>& table() {
  static const std::map<std::string, CommandInfo> t{
      {"verify-torus",
       {4.0, 20, {}, true,
        {{"radii", 1e-15}, {"pmc", 1e-8}, {"bitension", 1e-6}, {"flatness", 1e-8}, {"lagrangian", 1e-10},
         {"t_equals_h", 1e-8}, {"ah_identity", 1e-8}, {"proper", 1e-8}, {"s_constant", 1e-8}, {"sq", 1e-12},
         {"k_formula", 1e-6}, {"gauge", 1e-9}}}},
      {"verify-case3",
       {3.0, 5, {}, false,
        {{"commutativity", 1e-5}, {"frame", 1e-6}, {"model", 1e-10}, {"invariants", 1e-4}, {"flatness", 1e-5},
         {"pmc", 1e-8}, {"bitension", 1e-6}, {"shape", 1e-5}, {"sigma11", 1e-6}, {"curve", 1e-5},
         {"gauge", 1e-9}}}},
      {"verify-curves",
       {6.0, 20, {}, false,
        {{"nu_formula", 1e-9}, {"drift", 1e-8}, {"curvature", 1e-6}, {"torsion", 1e-7},
         {"torsion_constancy", 1e-6}, {"circle_torsion", 1e-8}}}},
      {"verify-simons",
       {3.0, 6, {}, true,
        {{"sq", 1e-12}, {"pmc", 1e-8}, {"simons", 1e-6}, {"codazzi", 1e-6}, {"laplacian_fd", 1e-4},
         {"holomorphic", 1e-6}, {"grad_s", 1e-8}, {"k_formula", 1e-6}}}},
      {"verify-algebra",
       {3.0, 20, {}, false, {{"algebra", 1e-12}, {"curvature", 1e-10}, {"bianchi", 1e-12}, {"radii", 1e-15}}}},
      {"controls",
       {4.0, 10, {"perturbed-torus", "minimal-torus", "generic", "cp1"}, false,
        {{"pmc", 1e-8}, {"bitension", 1e-6}, {"bitension_exceeds", 1e-3}, {"simons", 1e-5}, {"minimal", 1e-8}}}},
      {"export-curve", {6.0, 20, {"gamma1", "gamma2"}, false, {}}},
      {"export-grid",
       {4.0, 20, {"torus-plus", "torus-minus", "case-iii", "perturbed-torus", "minimal-torus", "generic", "cp1"},
        false, {}}},
  };
  return t;
}

const CommandInfo& info(const std::string& command) {
  const auto it = table().find(command);
  if (it == table().end()) throw UsageError("unknown command '" + command + "'");
  return it->second;
}

double resolved_rho(const RunConfig& c) {
  if (c.rho) return *c.rho;
  if (c.command == "export-grid" && c.case_tag == "case-iii") return 3.0;
  return info(c.command).rho;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

std::map<std::string, double> default_tolerances(const std::string& command) { return info(command).tolerances; }

void validate(const RunConfig& c) {
  const CommandInfo& ci = info(c.command);
  if (c.rho && !(*c.rho > 0.0 && std::isfinite(*c.rho))) throw UsageError("--rho must be positive");
  if (c.grid && *c.grid <= 0) throw UsageError("--grid must be positive");
  if (!(c.step > 0.0 && c.step < 1.0)) throw UsageError("--step must lie in (0, 1)");
  if (!c.case_tag.empty() && !ci.cases.count(c.case_tag))
    throw UsageError("command '" + c.command + "' does not accept --case " + c.case_tag);
  if (!c.branch.empty()) {
    if (!ci.branch) throw UsageError("command '" + c.command + "' does not accept --branch");
    if (c.branch != "plus" && c.branch != "minus") throw UsageError("--branch must be plus or minus");
  }
  for (const auto& [name, value] : c.tolerances) {
    if (!ci.tolerances.count(name)) throw UsageError("unknown tolerance '" + name + "' for " + c.command);
    if (!(value > 0.0 && std::isfinite(value))) throw UsageError("tolerance '" + name + "' must be positive");
  }
}

std::string canonical(const RunConfig& c) {
  std::ostringstream os;
  os << "command=" << c.command << ";rho=" << g17(resolved_rho(c)) << ";case=" << c.case_tag
     << ";branch=" << c.branch << ";grid=" << c.grid.value_or(info(c.command).grid) << ";step=" << g17(c.step)
     << ";format=" << format_name(c.format) << ";seed=" << (c.seed ? std::to_string(*c.seed) : "none") << ";tol=";
  for (const auto& [k, v] : c.tolerances) os << k << ':' << g17(v) << ',';
  return os.str();
}

RunResult run_report(const RunConfig& c) {
  validate(c);
  const CommandInfo& ci = info(c.command);

  SuiteContext ctx;
  ctx.rho = resolved_rho(c);
  ctx.case_tag = c.case_tag;
  ctx.branch = c.branch;
  const int n = c.grid.value_or(ci.grid);
  ctx.grid = Grid{n, n};
  ctx.step = c.step;
  ctx.tol = ci.tolerances;
  for (const auto& [k, v] : c.tolerances) ctx.tol[k] = v;
  ctx.seed = c.seed;

  RunResult r;
  ResidualReport& rep = r.report;
  rep.meta.command = c.command;
  rep.meta.rho = ctx.rho;
  rep.meta.case_tag = c.case_tag;
  rep.meta.branch = c.branch;
  rep.meta.grid = n;
  rep.meta.step = c.step;
  rep.meta.seed = c.seed;
  rep.meta.tolerances = ctx.tol;
  rep.meta.config_hash = config_hash(canonical(c));

  try {
    if (c.command == "verify-torus") verify_torus(ctx, rep);
    else if (c.command == "verify-case3") verify_case3(ctx, rep);
    else if (c.command == "verify-curves") verify_curves(ctx, rep);
    else if (c.command == "verify-simons") verify_simons(ctx, rep);
    else if (c.command == "verify-algebra") verify_algebra(ctx, rep);
    else if (c.command == "controls") controls(ctx, rep);
    else if (c.command == "export-curve") r.payload = export_curve(ctx);
    else if (c.command == "export-grid") r.payload = export_grid(ctx, c.format == Format::Json);
    r.exit_code = rep.exit_code();
  } catch (const Error& e) {
    rep.add("internal_error", std::nan(""), 0.0, Provenance::Trivial, Compare::AtMost, e.what());
    r.payload.reset();
    r.exit_code = 3;
  }
  return r;
}

std::string render(const RunResult& r, Format f) {
  if (r.payload) return *r.payload;
  switch (f) {
    case Format::Json: return to_json(r.report);
    case Format::Csv: return to_csv(r.report);
    case Format::Text: return to_text(r.report);
  }
  return {};
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw UsageError("--format must be json, csv or text");
}

std::pair<std::string, double> parse_tolerance(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
    throw UsageError("--tol expects NAME=VALUE, got '" + spec + "'");
  const std::string name = spec.substr(0, eq), text = spec.substr(eq + 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw UsageError("--tol value for '" + name + "' is not a number");
  return {name, value};
}

}  // namespace cpbih::cli
