// cpbih: verification reports for biharmonic pmc surfaces in CP^n.
//
//   cpbih verify-torus --branch plus --format json
//   cpbih controls --case perturbed-torus
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error,
// 3 internal numeric failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "run_report.hpp"

int main(int argc, char** argv) {
  using namespace cpbih::cli;

  CLI::App app{"Residual reports for biharmonic pmc surfaces in complex projective space"};
  app.set_version_flag("--version", "cpbih 0.1.0");

  RunConfig config;
  double rho = 0.0;
  int grid = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::vector<std::string> tols;

  app.add_option("command", config.command, "Suite or export to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  auto* rho_opt = app.add_option("--rho", rho, "Holomorphic sectional curvature");
  app.add_option("--case", config.case_tag, "Case tag (controls and exports)");
  app.add_option("--branch", config.branch, "Torus branch")->check(CLI::IsMember({"plus", "minus"}));
  auto* grid_opt = app.add_option("--grid", grid, "N for an N x N sample grid");
  app.add_option("--step", config.step, "ODE step")->capture_default_str();
  app.add_option("--tol", tols, "Tolerance override NAME=VALUE (repeatable)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomised property checks");
  app.add_option("--out", config.out, "Write to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rho_opt) config.rho = rho;
    if (*grid_opt) config.grid = grid;
    if (*seed_opt) config.seed = seed;
    config.format = parse_format(format);
    for (const auto& t : tols) {
      const auto [name, value] = parse_tolerance(t);
      config.tolerances[name] = value;
    }
    const RunResult result = run_report(config);
    const std::string text = render(result, config.format);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(config.out, std::ios::binary);
      if (!f) {
        std::cerr << "cpbih: cannot open " << config.out << '\n';
        return 3;
      }
      f << text;
    }
    if (result.exit_code == 3)
      for (const auto& row : result.report.rows())
        if (row.name == "internal_error") std::cerr << "cpbih: " << row.note << '\n';
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "cpbih: " << e.what() << '\n';
    return 2;
  }
}
