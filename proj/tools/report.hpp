#pragma once

#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "json.hpp"
#include "linezero/series/rational.hpp"

namespace linezero::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct Table {
  std::string suffix;  // "" for the main CSV, else written to <out>_<suffix>.csv
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct RunReport {
  Command command = Command::gen;
  json config = json::object();
  json items = json::array();   // one object per item, each with "pass"
  json summary = json::object();
  size_t pass = 0, fail = 0;
  size_t errors = 0;            // items that threw
  bool nonconverged = false;
  double wall_time_s = 0;
  std::vector<Table> tables;
  std::string svg;

  // Records an item outcome; `item` must not already carry "pass".
  void add(json item, bool ok);
  void add_error(json item, const std::string& message, bool nonconvergence);
  json to_json() const;
  // 0 all pass, 1 counterexample, 3 non-convergence (numeric failure only).
  int exit_code() const;
};

// 17 significant digits, the shortest form that round-trips a double.
std::string num(double x);
std::string rat(const series::Rational& q);
std::string boolean(bool b);

std::string csv_text(const Table& t);
// Writes through a temporary in the same directory and renames over `path`.
void write_atomic(const std::string& path, const std::string& content);

struct SvgSeries {
  std::vector<std::pair<double, double>> points;
  std::string color;
  bool line = false;  // polyline instead of dots
};
std::string svg_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                     const std::vector<SvgSeries>& series);
// Bars for hist on [edges[k], edges[k+1]] with an overlaid curve.
std::string svg_histogram(const std::string& title, const std::vector<double>& edges, const std::vector<double>& hist,
                          const std::vector<std::pair<double, double>>& curve);

}  // namespace linezero::cli
