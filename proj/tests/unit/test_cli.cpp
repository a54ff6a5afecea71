#include <gtest/gtest.h>

#include "json.hpp"
#include "run_report.hpp"

using namespace cpbih::cli;

namespace {

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  c.format = Format::Json;
  return c;
}

}  // namespace

TEST(Cli, CommandsAndTolerances) {
  const auto& cmds = commands();
  EXPECT_EQ(cmds.size(), 8u);
  EXPECT_TRUE(default_tolerances("verify-torus").count("bitension"));
  EXPECT_THROW(default_tolerances("verify-everything"), UsageError);
}

TEST(Cli, UsageErrors) {
  RunConfig c = config("verify-torus");
  c.tolerances["nonsense"] = 1e-3;
  EXPECT_THROW(run_report(c), UsageError);
  c = config("verify-torus");
  c.tolerances["pmc"] = -1.0;
  EXPECT_THROW(run_report(c), UsageError);
  c = config("verify-torus");
  c.case_tag = "cp1";
  EXPECT_THROW(run_report(c), UsageError);
  c = config("verify-case3");
  c.branch = "plus";
  EXPECT_THROW(run_report(c), UsageError);
  c = config("verify-algebra");
  c.step = 0.0;
  EXPECT_THROW(run_report(c), UsageError);
  c = config("verify-algebra");
  c.rho = -3.0;
  EXPECT_THROW(run_report(c), UsageError);
  c = config("controls");
  c.case_tag = "nothing";
  EXPECT_THROW(run_report(c), UsageError);
  EXPECT_THROW(parse_tolerance("pmc"), UsageError);
  EXPECT_THROW(parse_tolerance("pmc=abc"), UsageError);
  EXPECT_THROW(parse_tolerance("=1e-3"), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
  EXPECT_EQ(parse_tolerance("pmc=1e-3").second, 1e-3);
}

TEST(Cli, DeterministicOutput) {
  const RunConfig c = config("verify-algebra");
  EXPECT_EQ(render(run_report(c), Format::Json), render(run_report(c), Format::Json));
  RunConfig seeded = c;
  seeded.seed = 12345;
  EXPECT_NE(run_report(c).report.meta.config_hash, run_report(seeded).report.meta.config_hash);
}

TEST(Cli, AlgebraReport) {
  const RunResult r = run_report(config("verify-algebra"));
  EXPECT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(render(r, Format::Json));
  EXPECT_EQ(doc["meta"]["rho"].get<double>(), 3.0);
  EXPECT_NEAR(doc["data"]["a3"][0].get<double>(), -11.0 / 6.0, 1e-12);
  bool saw_control = false;
  for (const auto& row : doc["rows"])
    if (row["control"].get<bool>()) {
      saw_control = true;
      EXPECT_FALSE(row["pass"].get<bool>()) << row["name"];
    }
  EXPECT_TRUE(saw_control);
}

TEST(Cli, ControlsExitZero) {
  RunConfig c = config("controls");
  c.grid = 4;
  for (const char* tag : {"perturbed-torus", "minimal-torus", "generic", "cp1"}) {
    c.case_tag = tag;
    EXPECT_EQ(run_report(c).exit_code, 0) << tag;
  }
}

TEST(Cli, TightToleranceFails) {
  RunConfig c = config("verify-algebra");
  c.tolerances["algebra"] = 1e-300;
  EXPECT_EQ(run_report(c).exit_code, 1);
}

TEST(Cli, NumericFailureExitsThree) {
  // RK4 with step 0.9 breaks the frame along the helix.
  RunConfig c = config("verify-curves");
  c.step = 0.9;
  const RunResult r = run_report(c);
  EXPECT_EQ(r.exit_code, 3);
  ASSERT_FALSE(r.report.rows().empty());
  EXPECT_EQ(r.report.rows().back().name, "internal_error");
}

TEST(Cli, Exports) {
  RunConfig c = config("export-curve");
  c.case_tag = "gamma2";
  c.format = Format::Csv;
  const RunResult r = run_report(c);
  ASSERT_TRUE(r.payload.has_value());
  EXPECT_EQ(r.payload->rfind("s,", 0), 0u);
  c = config("export-grid");
  c.case_tag = "cp1";
  c.grid = 2;
  const auto doc = nlohmann::json::parse(render(run_report(c), Format::Json));
  EXPECT_EQ(doc["samples"].size(), 4u);
}
