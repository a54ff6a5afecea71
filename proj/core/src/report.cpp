#include "cpbih/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cpbih {

using ojson = nlohmann::ordered_json;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "?";
}

namespace {

const char* compare_name(Compare c) { return c == Compare::AtMost ? "<=" : ">"; }

bool evaluate(double value, double tol, Compare c) {
  if (!std::isfinite(value)) return false;
  return c == Compare::AtMost ? value <= tol : value > tol;
}

ojson number(double x) { return std::isfinite(x) ? ojson(x) : ojson(nullptr); }

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportRow& ResidualReport::add(std::string name, double value, double tol, Provenance provenance, Compare compare,
                               std::string note) {
  ReportRow r;
  r.name = std::move(name);
  r.value = value;
  r.tol = tol;
  r.compare = compare;
  r.pass = evaluate(value, tol, compare);
  r.provenance = provenance;
  r.note = std::move(note);
  rows_.push_back(std::move(r));
  return rows_.back();
}

ReportRow& ResidualReport::add_control(std::string name, double value, double tol, Provenance provenance,
                                       Compare compare, std::string note) {
  ReportRow& r = add(std::move(name), value, tol, provenance, compare, std::move(note));
  r.control = true;
  return r;
}

ReportRow& ResidualReport::add_flag(std::string name, bool holds, Provenance provenance, std::string note) {
  return add(std::move(name), holds ? 1.0 : 0.0, 0.5, provenance, Compare::Exceeds, std::move(note));
}

void ResidualReport::set_data(const std::string& key, std::vector<double> values) {
  data_[key] = std::move(values);
}

bool ResidualReport::all_pass() const {
  for (const auto& r : rows_)
    if (!r.control && !r.pass) return false;
  return true;
}

int ResidualReport::exit_code() const { return all_pass() ? 0 : 1; }

std::string to_json(const ResidualReport& report) {
  ojson meta;
  meta["command"] = report.meta.command;
  meta["rho"] = number(report.meta.rho);
  meta["case"] = report.meta.case_tag;
  meta["branch"] = report.meta.branch;
  meta["grid"] = report.meta.grid;
  meta["step"] = number(report.meta.step);
  meta["seed"] = report.meta.seed ? ojson(*report.meta.seed) : ojson(nullptr);
  ojson tols = ojson::object();
  for (const auto& [k, v] : report.meta.tolerances) tols[k] = number(v);
  meta["tolerances"] = tols;
  meta["config_hash"] = report.meta.config_hash;
  meta["all_pass"] = report.all_pass();

  ojson rows = ojson::array();
  for (const auto& r : report.rows()) {
    ojson row;
    row["name"] = r.name;
    row["value"] = number(r.value);
    row["tol"] = number(r.tol);
    row["compare"] = compare_name(r.compare);
    row["pass"] = r.pass;
    row["provenance"] = to_string(r.provenance);
    row["control"] = r.control;
    row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  ojson data = ojson::object();
  for (const auto& [k, values] : report.data()) {
    ojson arr = ojson::array();
    for (double x : values) arr.push_back(number(x));
    data[k] = std::move(arr);
  }
  ojson doc;
  doc["meta"] = std::move(meta);
  doc["rows"] = std::move(rows);
  doc["data"] = std::move(data);
  return doc.dump(2) + "\n";
}

std::string to_csv(const ResidualReport& report) {
  std::ostringstream os;
  os << "name,value,tol,compare,pass,provenance,control,note\n";
  for (const auto& r : report.rows()) {
    os << csv_field(r.name) << ',' << fmt17(r.value) << ',' << fmt17(r.tol) << ',' << compare_name(r.compare) << ','
       << (r.pass ? "true" : "false") << ',' << to_string(r.provenance) << ',' << (r.control ? "true" : "false")
       << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

std::string to_text(const ResidualReport& report) {
  std::size_t width = 4;
  for (const auto& r : report.rows()) width = std::max(width, r.name.size());
  std::ostringstream os;
  os << "command: " << report.meta.command << "  rho: " << fmt17(report.meta.rho);
  if (!report.meta.case_tag.empty()) os << "  case: " << report.meta.case_tag;
  if (!report.meta.branch.empty()) os << "  branch: " << report.meta.branch;
  os << "  config: " << report.meta.config_hash << '\n';
  for (const auto& r : report.rows()) {
    const char* verdict = r.pass ? "PASS" : "FAIL";
    os << (r.control ? "[control] " : "          ") << std::left << std::setw(static_cast<int>(width)) << r.name
       << "  " << verdict << "  " << std::setw(24) << fmt17(r.value) << ' ' << std::setw(2)
       << compare_name(r.compare) << ' ' << std::setw(8) << fmt17(r.tol) << "  [" << to_string(r.provenance) << ']';
    if (!r.note.empty()) os << "  " << r.note;
    os << '\n';
  }
  os << (report.all_pass() ? "result: PASS\n" : "result: FAIL\n");
  return os.str();
}

std::string config_hash(const std::string& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct GridRow {
  SamplePoint p;
  FundamentalData d;
};

std::vector<GridRow> sweep(const Chart& chart, const Grid& grid) {
  std::vector<GridRow> out;
  for (const auto& p : sample_points(chart.domain, grid)) out.push_back({p, fundamental_data(chart, p.u, p.v)});
  return out;
}

}  // namespace

std::string grid_csv(const Chart& chart, const Grid& grid) {
  const auto rows = sweep(chart, grid);
  const int dim = chart.map.dimension();
  std::ostringstream os;
  os << "u,v";
  for (int k = 0; k < dim; ++k) os << ",z" << k << "_re,z" << k << "_im";
  os << ",K_intrinsic,K_gauss,H_norm,T_norm,cos_theta,pmc\n";
  for (const auto& r : rows) {
    os << fmt17(r.p.u) << ',' << fmt17(r.p.v);
    for (int k = 0; k < dim; ++k) os << ',' << fmt17(r.d.z[k].real()) << ',' << fmt17(r.d.z[k].imag());
    os << ',' << fmt17(r.d.k_intrinsic) << ',' << fmt17(r.d.k_gauss) << ',' << fmt17(r.d.h_norm) << ','
       << fmt17(r.d.t.norm()) << ',' << fmt17(r.d.cos_theta) << ','
       << fmt17(r.d.dperp_h[0].norm() + r.d.dperp_h[1].norm()) << '\n';
  }
  return os.str();
}

std::string grid_json(const Chart& chart, const Grid& grid) {
  ojson doc;
  doc["chart"] = chart.name;
  doc["rho"] = number(chart.rho);
  ojson samples = ojson::array();
  for (const auto& r : sweep(chart, grid)) {
    ojson s;
    s["u"] = number(r.p.u);
    s["v"] = number(r.p.v);
    ojson z = ojson::array();
    for (int k = 0; k < r.d.z.size(); ++k) z.push_back({number(r.d.z[k].real()), number(r.d.z[k].imag())});
    s["z"] = std::move(z);
    s["K_intrinsic"] = number(r.d.k_intrinsic);
    s["K_gauss"] = number(r.d.k_gauss);
    s["H_norm"] = number(r.d.h_norm);
    s["T_norm"] = number(r.d.t.norm());
    s["cos_theta"] = number(r.d.cos_theta);
    s["pmc"] = number(r.d.dperp_h[0].norm() + r.d.dperp_h[1].norm());
    samples.push_back(std::move(s));
  }
  doc["samples"] = std::move(samples);
  return doc.dump(2) + "\n";
}

}  // namespace cpbih
