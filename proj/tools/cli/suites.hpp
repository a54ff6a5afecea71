#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cpbih/report.hpp"
#include "cpbih/surfaces.hpp"

namespace cpbih::cli {

/// Resolved parameters handed to a suite.
struct SuiteContext {
  double rho = 0.0;
  std::string case_tag;
  std::string branch;
  Grid grid;
  double step = 1e-3;
  std::map<std::string, double> tol;  ///< defaults merged with overrides
  std::optional<std::uint64_t> seed;

  double t(const std::string& name) const { return tol.at(name); }
};

void verify_torus(const SuiteContext& ctx, ResidualReport& out);
void verify_case3(const SuiteContext& ctx, ResidualReport& out);
void verify_curves(const SuiteContext& ctx, ResidualReport& out);
void verify_simons(const SuiteContext& ctx, ResidualReport& out);
void verify_algebra(const SuiteContext& ctx, ResidualReport& out);
void controls(const SuiteContext& ctx, ResidualReport& out);

std::string export_curve(const SuiteContext& ctx);
std::string export_grid(const SuiteContext& ctx, bool json);

}  // namespace cpbih::cli
