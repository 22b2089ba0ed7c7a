// Acceptance runner: one PASS/FAIL line per criterion, exit 0 only if all requested criteria pass.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "report.hpp"

using namespace linezero::cli;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

RunReport execute(RunConfig cfg) {
  validate(cfg);
  return run(cfg);
}

RunConfig make(Command c) {
  RunConfig cfg;
  cfg.command = c;
  return cfg;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

Verdict table_rows() {
  auto cfg = make(Command::q_table);
  cfg.p = "0";
  cfg.pstar = "1";
  cfg.n = 4;
  const auto rep = execute(cfg);
  const std::vector<std::vector<long>> want{
      {1}, {1, -2}, {0, -4, 4}, {0, -4, 12, -8}, {0, -16, 32, -32, 16}};
  std::vector<std::vector<long>> got(5);
  for (const auto& row : rep.tables.at(0).rows) got.at(std::stoul(row[0])).push_back(std::stol(row[2]));
  const bool ok = got == want && rep.fail == 0;
  return {ok, ok ? "5 rows exact" : "row mismatch"};
}

Verdict example_polys() {
  auto cfg = make(Command::gen);
  cfg.n = 9;
  cfg.n_max = 10;
  const auto rep = execute(cfg);
  const std::vector<std::vector<std::string>> want{
      {"362880", "-1297152", "1884672", "-1838080", "919296", "-462336", "96768", "-30720", "2304", "-512"},
      {"3628800", "-12971520", "21441024", "-18380800", "12869120", "-4623360", "1892352", "-307200", "84480", "-5120",
       "1024"}};
  bool ok = rep.items.size() == 2;
  for (size_t i = 0; ok && i < 2; ++i) ok = rep.items[i]["coeffs"].get<std::vector<std::string>>() == want[i];
  return {ok, ok ? "degrees 9 and 10 exact" : "coefficient mismatch"};
}

struct Family {
  std::string alpha, pexp, p, pstar;
};

Verdict zero_line() {
  const std::vector<Family> line{
      {"1", "", "-1", "0"},        {"1", "", "0", "0"},          {"1", "", "-1", "-1"},
      {"1", "", "-2", "1"},        {"1", "", "-1/2", "1/2"},     {"1", "", "-3", "2"},
      {"1", "", "-3/2", "1"},      {"1", "", "-5/2", "0"},       {"1", "", "1/3", "-1/2"},
      {"1", "", "2", "-3"},        {"1", "", "-7/4", "3/4"},     {"2", "", "-1", "1/2"},
      {"1,11/10", "-1/2", "-1", "0"}, {"1,2", "1", "-1", "0"},   {"1,3/2", "-1", "-1", "0"},
      {"1,2,3", "1,1", "-2", "1"}, {"1,5/4", "2", "-1", "-1"},   {"2,3", "-1/2", "-1", "0"},
      {"1,3", "1/2", "-3/2", "1"}, {"1,4/3,5/3", "-1,1", "-1", "0"}};
  const std::vector<Family> bounded{
      {"1", "", "0", "1"},   {"1", "", "1", "2"},     {"1", "", "2", "2"},    {"1", "", "3/2", "2"},
      {"1", "", "1/2", "3/2"}, {"1", "", "0", "1/2"}, {"1", "", "1", "1"},    {"1", "", "3", "-1"},
      {"1", "", "5/2", "1/2"}, {"1", "", "1/4", "1"}};
  size_t bad_families = 0, bad_degrees = 0;
  std::string first;
  auto sweep = [&](const Family& f) {
    auto cfg = make(Command::verify);
    cfg.alpha = f.alpha;
    cfg.pexp = f.pexp;
    cfg.p = f.p;
    cfg.pstar = f.pstar;
    cfg.n = 1;
    cfg.n_max = 60;
    const auto rep = execute(cfg);
    if (rep.fail + rep.errors == 0) return;
    ++bad_families;
    bad_degrees += rep.fail + rep.errors;
    if (first.empty())
      for (const auto& it : rep.items)
        if (!it.value("pass", false)) {
          first = "alpha=[" + f.alpha + "] pexp=[" + f.pexp + "] p=" + f.p + " p*=" + f.pstar +
                  " n=" + std::to_string(it.value("n", 0u)) + " offline=" + std::to_string(it.value("offline_count", 0u));
          break;
        }
  };
  for (const auto& f : line) sweep(f);
  const size_t line_bad = bad_families;
  for (const auto& f : bounded) sweep(f);
  const bool ok = bad_families == 0;
  std::string detail = std::to_string(line.size()) + "+" + std::to_string(bounded.size()) + " families, " +
                       std::to_string(line_bad) + " on-line and " + std::to_string(bad_families - line_bad) +
                       " bounded families with failures (" + std::to_string(bad_degrees) + " degrees)";
  if (!first.empty()) detail += "; first: " + first;
  return {ok, detail};
}

Verdict interlacing() {
  auto cfg = make(Command::interlace);
  cfg.n = 1;
  cfg.n_max = 50;
  const auto rep = execute(cfg);
  bool nine = false;
  for (const auto& it : rep.items)
    if (it["n"] == 9) nine = it["lower"].size() == 9 && it["upper"].size() == 10 && it["interlaced"].get<bool>();
  const bool ok = rep.fail == 0 && rep.errors == 0 && nine;
  return {ok, std::to_string(rep.pass) + "/50 interlaced, degree 9/10 pair " + (nine ? "ok" : "wrong")};
}

Verdict mellin() {
  auto cfg = make(Command::mellin);
  cfg.p = "0";
  cfg.pstar = "1";
  cfg.n = 0;
  cfg.n_max = 8;
  cfg.tol = 1e-8;
  cfg.s_grid = "3/2,2,5/2,3";
  const auto base = execute(cfg);
  cfg.family = "phi_x2";
  cfg.s_grid = "3,4,5,6";
  const auto halved = execute(cfg);
  double worst = 0, worst_x2 = 0;
  for (const auto& it : base.items) worst = std::max(worst, it["rel_error"].get<double>());
  for (size_t i = 0; i < halved.items.size() && i < base.items.size(); ++i) {
    const double a = halved.items[i]["lhs"][0], b = base.items[i]["lhs"][0];
    worst_x2 = std::max(worst_x2, std::abs(a - 0.5 * b) / std::abs(0.5 * b));
  }
  const bool ok = base.fail + base.errors + halved.fail + halved.errors == 0 && base.items.size() == 36 &&
                  halved.items.size() == 36 && worst < 1e-8 && worst_x2 < 1e-8;
  return {ok, "max rel error " + fmt(worst) + ", halved-argument consistency " + fmt(worst_x2)};
}

Verdict zeta_identity() {
  auto cfg = make(Command::zeta_id);
  cfg.p = "0";
  cfg.pstar = "1";
  cfg.n = 0;
  cfg.n_max = 4;
  cfg.tol = 1e-5;
  cfg.s_grid = "4,5,6,8";
  const auto rep = execute(cfg);
  double worst = 0;
  bool closed = false;
  const double pi = std::numbers::pi;
  for (const auto& it : rep.items) {
    worst = std::max(worst, it["rel_error"].get<double>());
    if (it["j"] == 0 && it["s"] == 4.0) closed = std::abs(it["rhs"].get<double>() - pi * pi / 90) < 1e-15;
  }
  const bool ok = rep.fail + rep.errors == 0 && rep.items.size() == 20 && closed && worst < 1e-5;
  return {ok, "max rel error " + fmt(worst) + ", j=0 s=4 closed form " + (closed ? "ok" : "wrong")};
}

Verdict asymptotics() {
  auto cfg = make(Command::asymp);
  cfg.n_list = "100,200,400,800";
  cfg.t_min = 0.5;
  cfg.t_steps = 1;
  const auto global = execute(cfg);
  std::vector<double> err;
  for (const auto& it : global.items) err.push_back(it["abs_ratio_minus_1"]);
  bool monotone = err.size() == 4;
  for (size_t i = 1; monotone && i < err.size(); ++i) monotone = err[i] < err[i - 1];

  cfg.mode = "small-t";
  cfg.n_list = "10000";
  cfg.t_min = 1;  // n t
  const auto small = execute(cfg);
  const double small_err = small.items.empty() ? INFINITY : small.items[0]["abs_ratio_minus_1"].get<double>();
  const bool ok = monotone && !err.empty() && err.back() < 0.05 && small_err < 0.1;
  std::string detail = "global errors";
  for (double e : err) detail += " " + fmt(e);
  detail += std::string(monotone ? " (decreasing)" : " (not decreasing)") + ", small-t n=1e4 error " + fmt(small_err);
  return {ok, detail};
}

Verdict parity() {
  auto cfg = make(Command::asymp);
  cfg.mode = "parity";
  cfg.n = 2;
  cfg.n_max = 9;
  cfg.t_min = 0.2;
  cfg.t_max = 0.8;
  cfg.t_steps = 3;
  cfg.tol = 1e-6;
  const auto rep = execute(cfg);
  bool by_parity = true;
  double worst = 0;
  std::string even_branch, odd_branch;
  for (const auto& it : rep.items) {
    auto& b = it["n"].get<unsigned>() % 2 ? odd_branch : even_branch;
    const std::string branch = it["branch"];
    if (b.empty()) b = branch;
    by_parity = by_parity && b == branch;
    worst = std::max(worst, it["rel_error"].get<double>());
  }
  const bool ok = rep.fail + rep.errors == 0 && rep.items.size() == 24 && by_parity && even_branch != odd_branch;
  return {ok, "24 points, max rel error " + fmt(worst) + ", even->" + even_branch + " odd->" + odd_branch};
}

Verdict density() {
  auto cfg = make(Command::density);
  cfg.n_list = "100,500";
  const auto rep = execute(cfg);
  const double integral = rep.summary["integral_D"];
  const double ks100 = rep.items.at(0)["ks_distance"], ks500 = rep.items.at(1)["ks_distance"];
  const bool ok = std::abs(integral - 0.5) <= 1e-9 && ks500 < 0.05 && ks500 < ks100;
  return {ok, "integral " + fmt(integral) + ", KS n=100 " + fmt(ks100) + ", n=500 " + fmt(ks500)};
}

Verdict appendix() {
  const auto rep = execute(make(Command::appendix_audit));
  auto find = [&](const std::string& prefix) -> const json* {
    for (const auto& it : rep.items)
      if (it.contains("check") && it["check"].get<std::string>().rfind(prefix, 0) == 0) return &it;
    return nullptr;
  };
  const json* g = find("g(r,s) < 0");
  const json* re = find("min t subject to Re");
  const json* im = find("max t subject to Im");
  const json* dz = find("Im z'");
  if (!g || !re || !im || !dz) return {false, "missing audit item"};
  const double t_re = (*re)["t"], t_im = (*im)["t"];
  const bool ok = std::abs(t_re - 0.924256) < 1e-4 && std::abs(t_im - 0.707107) < 1e-4 &&
                  (*g)["counterexamples"] == 0 && (*dz)["failures"] == 0;
  return {ok, "extrema " + fmt(t_re) + " / " + fmt(t_im) + ", g counterexamples " +
                  std::to_string((*g)["counterexamples"].get<size_t>()) + " of " +
                  std::to_string((*g)["points"].get<size_t>()) + ", Im z' failures " +
                  std::to_string((*dz)["failures"].get<size_t>())};
}

struct Criterion {
  std::function<Verdict()> check;
  double budget_s;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{{table_rows, 1},    {example_polys, 1}, {zero_line, 600},  {interlacing, 60},
                                   {mellin, 120},      {zeta_identity, 300}, {asymptotics, 600}, {parity, 600},
                                   {density, 300},     {appendix, 300}};
  std::vector<size_t> which;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    const long k = std::strtol(argv[2], nullptr, 10);
    if (k < 1 || k > long(all.size())) {
      std::cerr << "criterion must be 1.." << all.size() << "\n";
      return 2;
    }
    which.push_back(size_t(k));
  } else if (argc == 1) {
    for (size_t k = 1; k <= all.size(); ++k) which.push_back(k);
  } else {
    std::cerr << "usage: acceptance [--criterion k]\n";
    return 2;
  }

  int failures = 0;
  for (size_t k : which) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = all[k - 1].check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > all[k - 1].budget_s) {
      v.pass = false;
      v.detail += " (over the " + fmt(all[k - 1].budget_s) + " s budget)";
    }
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << " [" << fmt(secs) << " s] " << v.detail
              << std::endl;
    failures += !v.pass;
  }
  return failures ? 1 : 0;
}
