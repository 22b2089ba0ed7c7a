#include "config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>

#include "linezero/error.hpp"

namespace linezero::cli {

namespace {
using series::parse_rational;
using series::Rational;

constexpr std::array<std::pair<Command, const char*>, 11> kNames{{
    {Command::gen, "gen"},
    {Command::q_table, "q-table"},
    {Command::roots, "roots"},
    {Command::verify, "verify"},
    {Command::interlace, "interlace"},
    {Command::mellin, "mellin"},
    {Command::zeta_id, "zeta-id"},
    {Command::asymp, "asymp"},
    {Command::density, "density"},
    {Command::arg_track, "arg-track"},
    {Command::appendix_audit, "appendix-audit"},
}};

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) out.push_back(parse_rational(item));
  return out;
}

// "3/2" or "2.5"; s-grid entries need not be exact.
double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) throw DomainError("malformed number: '" + text + "'");
  return v;
}
}  // namespace

const char* to_string(Command c) {
  for (const auto& [cmd, name] : kNames)
    if (cmd == c) return name;
  return "?";
}

Command parse_command(const std::string& text) {
  for (const auto& [cmd, name] : kNames)
    if (text == name) return cmd;
  throw DomainError("unknown command '" + text + "'");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& kv : kNames) v.emplace_back(kv.second);
    return v;
  }();
  return names;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

double default_tol(Command c) {
  switch (c) {
    case Command::mellin:
      return 1e-8;
    case Command::zeta_id:
      return 1e-5;
    case Command::asymp:
      return 0.1;
    case Command::density:
      return 0.05;
    case Command::verify:
    case Command::roots:
    case Command::interlace:
      return 1e-10;
    default:
      return 1e-6;
  }
}

void validate(RunConfig& cfg) {
  std::vector<Rational> alpha = rational_list(cfg.alpha);
  std::vector<Rational> pexp = rational_list(cfg.pexp);
  cfg.params = sheffer::ParamSet(std::move(alpha), std::move(pexp), parse_rational(cfg.p), parse_rational(cfg.pstar));

  cfg.n_values.clear();
  if (!cfg.n_list.empty()) {
    for (const auto& item : split_list(cfg.n_list)) {
      char* end = nullptr;
      const long v = std::strtol(item.c_str(), &end, 10);
      if (*end != '\0' || v < 0) throw DomainError("malformed n-list entry: '" + item + "'");
      cfg.n_values.push_back(static_cast<unsigned>(v));
    }
  } else if (cfg.n_max > 0) {
    if (cfg.n_max < cfg.n) throw DomainError("n-max must not be smaller than n");
    for (unsigned k = cfg.n; k <= cfg.n_max; ++k) cfg.n_values.push_back(k);
  } else {
    cfg.n_values.push_back(cfg.n);
  }

  if (cfg.t_steps == 0) throw DomainError("t-steps must be positive");
  if (cfg.t_steps > 1 && cfg.t_max < cfg.t_min) throw DomainError("t-max must not be smaller than t-min");
  cfg.t_values.clear();
  for (unsigned k = 0; k < cfg.t_steps; ++k)
    cfg.t_values.push_back(cfg.t_steps == 1 ? cfg.t_min
                                            : cfg.t_min + (cfg.t_max - cfg.t_min) * k / (cfg.t_steps - 1));

  cfg.s_values.clear();
  std::string grid = cfg.s_grid;
  if (grid.empty()) {
    if (cfg.command == Command::mellin) grid = "3/2,2,5/2,3";
    if (cfg.command == Command::zeta_id) grid = "4,5,6,8";
  }
  for (const auto& item : split_list(grid)) cfg.s_values.push_back(parse_real(item));

  if (cfg.tol < 0) cfg.tol = default_tol(cfg.command);
  if (cfg.prec_bits < 0) throw DomainError("prec-bits must be nonnegative");
  if (cfg.bins == 0) throw DomainError("bins must be positive");
}

}  // namespace linezero::cli
