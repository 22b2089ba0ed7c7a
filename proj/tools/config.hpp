#pragma once

#include <string>
#include <vector>

#include "linezero/sheffer/params.hpp"

namespace linezero::cli {

enum class Command { gen, q_table, roots, verify, interlace, mellin, zeta_id, asymp, density, arg_track, appendix_audit };

const char* to_string(Command c);
Command parse_command(const std::string& text);
const std::vector<std::string>& command_names();

enum class Format { csv, json, both };

// Parameters stay as text until validation so the report can echo them verbatim.
struct RunConfig {
  Command command = Command::gen;
  std::string p = "-1", pstar = "0";
  std::string alpha = "1";
  std::string pexp;
  unsigned n = 10;
  unsigned n_max = 0;          // 0: single n
  std::string n_list;          // overrides n / n_max when set
  double t_min = 0.2, t_max = 0.8;
  unsigned t_steps = 3;
  std::string s_grid;
  long prec_bits = 0;          // 0: root finder default
  double tol = -1;             // < 0: per-command default
  std::string mode = "global"; // asymp: small-t | global | parity
  std::string family = "phi";  // mellin: bump | meixner | phi | phi_x2
  std::string bump_alpha = "0";
  std::string meixner_b = "1", meixner_c = "2";
  unsigned bins = 25;
  double tau = 0.02;
  unsigned threads = 0;        // 0: hardware concurrency
  std::string out;             // file prefix; empty writes to stdout
  Format format = Format::csv;
  bool svg = false;

  // Checked views, built once by validate().
  sheffer::ParamSet params = sheffer::ParamSet::basic(-1, 0);
  std::vector<unsigned> n_values;
  std::vector<double> t_values;
  std::vector<double> s_values;
};

// Fills params, n_values, t_values and s_values; throws DomainError with a
// deterministic message on bad input.
void validate(RunConfig& cfg);

std::vector<std::string> split_list(const std::string& text);

double default_tol(Command c);

}  // namespace linezero::cli
