#pragma once

/**
 * @file report.hpp
 * @brief Named residual checks with explicit tolerances, and their
 *        JSON / CSV / text serialisations.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpbih/surfaces.hpp"

namespace cpbih {

/// Where the expected value of a check comes from.
enum class Provenance { Paper, Trivial, Derived };

std::string to_string(Provenance p);

/// How a measured value is compared with its tolerance.
enum class Compare {
  AtMost,   ///< pass iff value <= tol
  Exceeds,  ///< pass iff value > tol (negative controls)
};

struct ReportRow {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  Compare compare = Compare::AtMost;
  bool pass = false;
  Provenance provenance = Provenance::Derived;
  /// Control rows document expected failures; they never affect the exit code.
  bool control = false;
  std::string note;
};

struct ReportMeta {
  std::string command;
  double rho = 0.0;
  std::string case_tag;
  std::string branch;
  int grid = 0;
  double step = 0.0;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> tolerances;  ///< effective overrides
  std::string config_hash;
};

class ResidualReport {
 public:
  ReportMeta meta;

  /// Appends a row; NaN values never pass.
  ReportRow& add(std::string name, double value, double tol, Provenance provenance,
                 Compare compare = Compare::AtMost, std::string note = {});
  ReportRow& add_control(std::string name, double value, double tol, Provenance provenance,
                         Compare compare = Compare::AtMost, std::string note = {});
  /// A row for a boolean fact (value 1 when it holds, tolerance 0.5, compared with Exceeds).
  ReportRow& add_flag(std::string name, bool holds, Provenance provenance, std::string note = {});

  /// Auxiliary numeric output (matrices are stored row-major).
  void set_data(const std::string& key, std::vector<double> values);

  const std::vector<ReportRow>& rows() const { return rows_; }
  const std::map<std::string, std::vector<double>>& data() const { return data_; }

  /// true iff every non-control row passes.
  bool all_pass() const;
  /// 0 when all non-control rows pass, 1 otherwise.
  int exit_code() const;

 private:
  std::vector<ReportRow> rows_;
  std::map<std::string, std::vector<double>> data_;
};

/// {"meta": {...}, "rows": [{name, value, tol, pass, provenance, control, compare, note}], "data": {...}}.
/// Non-finite values are written as null.
std::string to_json(const ResidualReport& report);

/// Columns: name,value,tol,compare,pass,provenance,control,note (17 significant digits).
std::string to_csv(const ResidualReport& report);

/// Aligned human-readable table.
std::string to_text(const ResidualReport& report);

/// 64-bit FNV-1a hash of a canonical configuration string, as 16 hex digits.
std::string config_hash(const std::string& canonical);

/// Per-sample summary of a chart on a grid. Columns: u, v, re/im of each lift
/// coordinate, K (intrinsic), K (Gauss), |H|, |T|, cos theta, pmc.
std::string grid_csv(const Chart& chart, const Grid& grid);

/// Same content as JSON: {"chart": name, "rho": rho, "samples": [...]}.
std::string grid_json(const Chart& chart, const Grid& grid);

}  // namespace cpbih
