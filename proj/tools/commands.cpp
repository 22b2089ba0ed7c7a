#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"
#include "linezero/asymptotics/appendix.hpp"
#include "linezero/asymptotics/argument.hpp"
#include "linezero/asymptotics/density.hpp"
#include "linezero/asymptotics/pn.hpp"
#include "linezero/error.hpp"
#include "linezero/roots/line.hpp"
#include "linezero/sheffer/families.hpp"
#include "linezero/special/mellin.hpp"
#include "linezero/special/quadrature.hpp"
#include "pool.hpp"

namespace linezero::cli {

namespace {
namespace asy = asymptotics;
using series::parse_rational;
using series::Rational;
using series::SPoly;

json echo(const RunConfig& c) {
  json j;
  j["p"] = c.p;
  j["pstar"] = c.pstar;
  j["alpha"] = c.alpha;
  j["pexp"] = c.pexp;
  j["n"] = c.n_values;
  j["t"] = c.t_values;
  j["s"] = c.s_values;
  j["prec_bits"] = c.prec_bits;
  j["tol"] = c.tol;
  if (c.command == Command::asymp) j["mode"] = c.mode;
  if (c.command == Command::mellin) {
    j["family"] = c.family;
    j["bump_alpha"] = c.bump_alpha;
    j["meixner_b"] = c.meixner_b;
    j["meixner_c"] = c.meixner_c;
  }
  if (c.command == Command::density) j["bins"] = c.bins;
  if (c.command == Command::arg_track) j["tau"] = c.tau;
  return j;
}

json poly_json(const SPoly& q) {
  json coeffs = json::array();
  for (const auto& a : q.coeffs()) coeffs.push_back(rat(a));
  return {{"degree", q.degree()}, {"poly", q.to_string()}, {"coeffs", coeffs}};
}

void coeff_rows(Table& t, unsigned n, const SPoly& q) {
  for (size_t k = 0; k < q.coeffs().size(); ++k) t.rows.push_back({std::to_string(n), std::to_string(k), rat(q.coeffs()[k])});
}

json cplx_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// Outcomes in input order; errors become failed items.
template <class T, class Emit>
void collect(RunReport& rep, const std::vector<Outcome<T>>& outs, const std::vector<json>& labels, Emit emit) {
  for (size_t i = 0; i < outs.size(); ++i) {
    if (outs[i].value) {
      emit(*outs[i].value, labels[i]);
    } else {
      rep.add_error(labels[i], outs[i].error, outs[i].nonconvergence);
    }
  }
}

std::vector<json> n_labels(const std::vector<unsigned>& ns) {
  std::vector<json> v;
  for (unsigned n : ns) v.push_back({{"n", n}});
  return v;
}

// ---------------------------------------------------------------- gen / q-table

void run_gen(const RunConfig& cfg, RunReport& rep) {
  const auto& P = cfg.params;
  struct Out {
    SPoly h;
    bool series_ok = false;
    std::optional<bool> feq, shift;
  };
  auto outs = parallel_map<Out>(cfg.n_values.size(), cfg.threads, [&](size_t i) {
    const unsigned n = cfg.n_values[i];
    Out o;
    o.h = sheffer::gen_h(n, P);
    // Scalar extraction from the generating function at two rational points.
    o.series_ok = true;
    for (const Rational& s : {Rational(1, 3), Rational(7, 2)})
      o.series_ok = o.series_ok && o.h.eval(s) == sheffer::h_value_from_series(n, P, s);
    if (P.N() == 0) {
      o.feq = sheffer::functional_eq_check(n, P.p(), P.pstar());
      o.shift = sheffer::shift_recurrence_check(n, P.p(), P.pstar());
    }
    return o;
  });
  Table t{"", {"n", "k", "coeff"}, {}};
  collect(rep, outs, n_labels(cfg.n_values), [&](const Out& o, json item) {
    const unsigned n = item["n"];
    item.update(poly_json(o.h));
    item["series_check"] = o.series_ok;
    bool ok = o.series_ok;
    if (o.feq) {
      item["functional_equation"] = *o.feq;
      item["shift_recurrence"] = *o.shift;
      ok = ok && *o.feq && *o.shift;
    }
    coeff_rows(t, n, o.h);
    rep.add(std::move(item), ok);
  });
  rep.tables.push_back(std::move(t));
}

void run_q_table(const RunConfig& cfg, RunReport& rep) {
  const auto& P = cfg.params;
  const unsigned nmax = *std::max_element(cfg.n_values.begin(), cfg.n_values.end());
  const auto table = sheffer::q_table(nmax, P.p(), P.pstar());
  Table t{"", {"n", "k", "coeff"}, {}};
  for (unsigned n = 0; n <= nmax; ++n) {
    json item{{"n", n}};
    item.update(poly_json(table[n]));
    const bool ok = table[n] == sheffer::gen_q(n, P.p(), P.pstar());
    item["matches_binomial_sum"] = ok;
    coeff_rows(t, n, table[n]);
    rep.add(std::move(item), ok);
  }
  rep.tables.push_back(std::move(t));
}

// ---------------------------------------------------------------- roots / verify

std::vector<std::pair<double, double>> root_points(const roots::RootReport& r) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& z : r.roots) pts.emplace_back(z.real().to_double(), z.imag().to_double());
  return pts;
}

void run_roots(const RunConfig& cfg, RunReport& rep, bool per_root) {
  const auto& P = cfg.params;
  auto outs = parallel_map<roots::LineCheck>(cfg.n_values.size(), cfg.threads, [&](size_t i) {
    return roots::verify_line(P, cfg.n_values[i], cfg.prec_bits, cfg.tol);
  });
  Table t;
  if (per_root)
    t.header = {"n", "index", "re", "im", "residual", "residual_bound", "on_line"};
  else
    t.header = {"n",   "degree", "offline_count", "allowed_offline", "unpaired_count", "precision_bits", "certified",
                "max_line_distance", "holds"};
  std::vector<SvgSeries> svg{{{}, "#1f77b4", false}};
  const double c = P.c().get_d();
  collect(rep, outs, n_labels(cfg.n_values), [&](const roots::LineCheck& lc, json item) {
    const auto& r = lc.report;
    double maxdist = 0;
    bool residuals_ok = true;
    for (size_t k = 0; k < r.roots.size(); ++k) {
      maxdist = std::max(maxdist, std::abs(r.roots[k].real().to_double() - c));
      const bool below = r.residuals[k] <= r.residual_bounds[k];
      residuals_ok = residuals_ok && below;
      if (per_root)
        t.rows.push_back({std::to_string(lc.n), std::to_string(k), num(r.roots[k].real().to_double()),
                          num(r.roots[k].imag().to_double()), num(r.residuals[k].to_double()),
                          num(r.residual_bounds[k].to_double()), boolean(r.on_line[k])});
    }
    if (!per_root)
      t.rows.push_back({std::to_string(lc.n), std::to_string(r.roots.size()), std::to_string(r.offline_count),
                        std::to_string(lc.allowed_offline), std::to_string(r.unpaired_count),
                        std::to_string(r.precision_bits), boolean(r.certified), num(maxdist), boolean(lc.holds)});
    auto pts = root_points(r);
    svg[0].points.insert(svg[0].points.end(), pts.begin(), pts.end());
    item["degree"] = r.roots.size();
    item["offline_count"] = r.offline_count;
    item["allowed_offline"] = lc.allowed_offline;
    item["unpaired_count"] = r.unpaired_count;
    item["precision_bits"] = r.precision_bits;
    item["certified"] = r.certified;
    item["residuals_below_bound"] = residuals_ok;
    item["max_line_distance"] = maxdist;
    item["holds"] = lc.holds;
    rep.add(std::move(item), per_root ? (r.certified && residuals_ok) : lc.holds);
  });
  rep.tables.push_back(std::move(t));
  if (cfg.svg) {
    std::vector<std::pair<double, double>> line{{c, 0}, {c, 0}};
    for (auto [x, y] : svg[0].points) line[0].second = std::min(line[0].second, y), line[1].second = std::max(line[1].second, y);
    svg.push_back({line, "#999999", true});
    rep.svg = svg_plot("zeros of h_n, " + P.describe(), "Re s", "Im s", svg);
  }
}

// ---------------------------------------------------------------- interlace

void run_interlace(const RunConfig& cfg, RunReport& rep) {
  const auto& P = cfg.params;
  auto outs = parallel_map<roots::InterlaceReport>(cfg.n_values.size(), cfg.threads, [&](size_t i) {
    return roots::interlace_report(cfg.n_values[i], P.p(), P.pstar(), cfg.prec_bits, cfg.tol);
  });
  Table t{"", {"n", "lower_count", "upper_count", "max_imag", "interlaced"}, {}};
  SvgSeries lower{{}, "#1f77b4", false}, upper{{}, "#d62728", false};
  collect(rep, outs, n_labels(cfg.n_values), [&](const roots::InterlaceReport& r, json item) {
    t.rows.push_back({std::to_string(r.n), std::to_string(r.lower.size()), std::to_string(r.upper.size()),
                      num(r.max_imag), boolean(r.interlaced)});
    item["lower"] = r.lower;
    item["upper"] = r.upper;
    item["max_imag"] = r.max_imag;
    item["interlaced"] = r.interlaced;
    for (double x : r.lower) lower.points.emplace_back(x, r.n);
    for (double x : r.upper) upper.points.emplace_back(x, r.n + 1);
    rep.add(std::move(item), r.interlaced);
  });
  rep.tables.push_back(std::move(t));
  if (cfg.svg) rep.svg = svg_plot("real zeros of hat q_n (blue) and hat q_{n+1} (red)", "s", "degree", {lower, upper});
}

// ---------------------------------------------------------------- mellin / zeta-id

void run_mellin(const RunConfig& cfg, RunReport& rep) {
  special::MellinFamily fam;
  fam.mode = special::parse_mellin_mode(cfg.family);
  fam.p = cfg.params.p();
  fam.pstar = cfg.params.pstar();
  fam.alpha = parse_rational(cfg.bump_alpha);
  fam.b = parse_rational(cfg.meixner_b);
  fam.cpar = parse_rational(cfg.meixner_c);
  std::vector<special::cplx> s;
  for (double x : cfg.s_values) s.emplace_back(x, 0.0);

  auto outs = parallel_map<std::vector<special::MellinPoint>>(cfg.n_values.size(), cfg.threads, [&](size_t i) {
    return special::verify_mellin_family(fam, {cfg.n_values[i]}, s, std::min(1e-10, cfg.tol / 10));
  });
  Table t{"", {"index", "s", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_error", "quad_error", "converged"}, {}};
  for (size_t i = 0; i < outs.size(); ++i) {
    if (!outs[i].value) {
      rep.add_error({{"index", cfg.n_values[i]}}, outs[i].error, outs[i].nonconvergence);
      continue;
    }
    for (const auto& pt : *outs[i].value) {
      t.rows.push_back({std::to_string(pt.index), num(pt.s.real()), num(pt.lhs.real()), num(pt.lhs.imag()),
                        num(pt.rhs.real()), num(pt.rhs.imag()), num(pt.rel_error), num(pt.quad_error),
                        boolean(pt.converged)});
      json item{{"index", pt.index}, {"s", pt.s.real()}, {"lhs", cplx_json(pt.lhs)}, {"rhs", cplx_json(pt.rhs)},
                {"rel_error", pt.rel_error}, {"quad_error", pt.quad_error}, {"converged", pt.converged}};
      rep.add(std::move(item), pt.converged && pt.rel_error < cfg.tol);
    }
  }
  rep.tables.push_back(std::move(t));
}

void run_zeta(const RunConfig& cfg, RunReport& rep) {
  const auto& P = cfg.params;
  auto outs = parallel_map<std::vector<special::ZetaPoint>>(cfg.n_values.size(), cfg.threads, [&](size_t i) {
    return special::verify_zeta_identity({cfg.n_values[i]}, P.p(), P.pstar(), cfg.s_values,
                                         std::min(1e-8, cfg.tol / 10));
  });
  Table t{"", {"j", "s", "lhs", "rhs", "rel_error", "quad_error", "head_bound", "x0", "converged"}, {}};
  for (size_t i = 0; i < outs.size(); ++i) {
    if (!outs[i].value) {
      rep.add_error({{"j", cfg.n_values[i]}}, outs[i].error, outs[i].nonconvergence);
      continue;
    }
    for (const auto& pt : *outs[i].value) {
      t.rows.push_back({std::to_string(pt.j), num(pt.s), num(pt.lhs), num(pt.rhs), num(pt.rel_error),
                        num(pt.quad_error), num(pt.head_bound), num(pt.x0), boolean(pt.converged)});
      json item{{"j", pt.j},         {"s", pt.s},
                {"lhs", pt.lhs},     {"rhs", pt.rhs},
                {"rel_error", pt.rel_error}, {"quad_error", pt.quad_error},
                {"head_bound", pt.head_bound}, {"converged", pt.converged}};
      rep.add(std::move(item), pt.converged && pt.rel_error < cfg.tol);
    }
  }
  rep.tables.push_back(std::move(t));
}

// ---------------------------------------------------------------- asymp

void run_parity(const RunConfig& cfg, RunReport& rep) {
  const auto pr = asy::parity_check(cfg.params, cfg.n_values, cfg.t_values, cfg.tol);
  rep.summary["even_sign"] = pr.even_sign;
  rep.summary["odd_sign"] = pr.odd_sign;
  rep.summary["all_hold"] = pr.all_hold;
  Table t{"", {"n", "t", "exact_re", "exact_im", "predicted_re", "predicted_im", "rel_error", "other_branch_rel", "holds"}, {}};
  for (const auto& pt : pr.points) {
    t.rows.push_back({std::to_string(pt.n), num(pt.t), num(pt.exact.real()), num(pt.exact.imag()),
                      num(pt.predicted.real()), num(pt.predicted.imag()), num(pt.rel_error),
                      num(pt.other_branch_rel), boolean(pt.holds)});
    json item{{"n", pt.n},
              {"t", pt.t},
              {"branch", pt.n % 2 == 0 ? "Im" : "-i Re"},
              {"exact", cplx_json(pt.exact)},
              {"predicted", cplx_json(pt.predicted)},
              {"rel_error", pt.rel_error},
              {"other_branch_rel", pt.other_branch_rel},
              {"contour_error", pt.contour_error}};
    rep.add(std::move(item), pt.holds);
  }
  rep.tables.push_back(std::move(t));
}

void run_asymp(const RunConfig& cfg, RunReport& rep) {
  if (cfg.mode == "parity") return run_parity(cfg, rep);
  const asy::AsympMode mode = asy::parse_asymp_mode(cfg.mode);
  const auto fp = asy::FloatParams::from(cfg.params);
  const bool small = mode == asy::AsympMode::small_t;

  struct Job {
    unsigned n;
    double grid, t;
  };
  std::vector<Job> jobs;
  std::vector<json> labels;
  for (double g : cfg.t_values)
    for (unsigned n : cfg.n_values) {
      // small-t mode reads the grid as n t
      jobs.push_back({n, g, small ? g / n : g});
      labels.push_back({{"n", n}, {"t", jobs.back().t}});
    }
  struct Out {
    asy::PnResult pn;
    asy::AsympResult af;
    std::complex<double> r;
  };
  auto outs = parallel_map<Out>(jobs.size(), cfg.threads, [&](size_t i) {
    Out o;
    o.pn = asy::p_n_contour(jobs[i].n, jobs[i].t, fp);
    o.af = asy::asymp_formula(jobs[i].n, jobs[i].t, fp, mode);
    o.r = asy::ratio(o.pn.value, o.af.value);
    return o;
  });

  Table t{"",
          {"n", "t", "pn_log_abs", "pn_arg", "formula_log_abs", "formula_arg", "ratio_re", "ratio_im", "abs_ratio_minus_1",
           "quad_rel_error", "range_mismatch", "L", "z_L"},
          {}};
  std::map<double, std::vector<std::pair<unsigned, double>>> by_grid;
  for (size_t i = 0; i < outs.size(); ++i) {
    json item = labels[i];
    if (small) item["nt"] = jobs[i].grid;
    if (!outs[i].value) {
      rep.add_error(std::move(item), outs[i].error, outs[i].nonconvergence);
      continue;
    }
    const Out& o = *outs[i].value;
    const double err = std::abs(o.r - 1.0);
    t.rows.push_back({std::to_string(jobs[i].n), num(jobs[i].t), num(o.pn.value.log_abs()), num(o.pn.value.arg()),
                      num(o.af.value.log_abs()), num(o.af.value.arg()), num(o.r.real()), num(o.r.imag()), num(err),
                      num(o.pn.rel_error), boolean(o.af.range_mismatch), num(o.pn.L), num(o.pn.z_L)});
    item["pn_log_abs"] = o.pn.value.log_abs();
    item["pn_arg"] = o.pn.value.arg();
    item["formula_log_abs"] = o.af.value.log_abs();
    item["formula_arg"] = o.af.value.arg();
    item["ratio"] = cplx_json(o.r);
    item["abs_ratio_minus_1"] = err;
    item["quad_rel_error"] = o.pn.rel_error;
    item["converged"] = o.pn.converged;
    item["range_mismatch"] = o.af.range_mismatch;
    item["cut_warning"] = o.pn.cut_warning;
    if (!small) item["eps_clipped"] = o.af.eps_clipped;
    by_grid[jobs[i].grid].emplace_back(jobs[i].n, err);
    rep.add(std::move(item), o.pn.converged && err < cfg.tol);
  }
  // Along increasing n at each grid value: is |ratio - 1| strictly decreasing?
  json mono = json::array();
  for (auto& [g, v] : by_grid) {
    std::sort(v.begin(), v.end());
    bool dec = true;
    for (size_t k = 1; k < v.size(); ++k) dec = dec && v[k].second < v[k - 1].second;
    mono.push_back({{small ? "nt" : "t", g}, {"decreasing", dec}, {"last_error", v.back().second}});
  }
  rep.summary["mode"] = asy::to_string(mode);
  rep.summary["monotone"] = mono;
  rep.tables.push_back(std::move(t));
}

// ---------------------------------------------------------------- density

void run_density(const RunConfig& cfg, RunReport& rep) {
  const auto& P = cfg.params;
  auto q = special::integrate_tanh_sinh([](double x) { return special::cplx(asy::density_D(x), 0); }, 0, 1,
                                        {.reltol = 1e-13});
  rep.summary["integral_D"] = q.value.real();
  rep.summary["integral_D_error"] = std::abs(q.value.real() - 0.5);

  auto outs = parallel_map<asy::DensityReport>(cfg.n_values.size(), cfg.threads,
                                               [&](size_t i) { return asy::empirical_density(cfg.n_values[i], P, cfg.bins); });
  Table t{"", {"n", "bin_lo", "bin_hi", "count", "hist", "model"}, {}};
  json ks = json::array();
  const asy::DensityReport* last = nullptr;
  collect(rep, outs, n_labels(cfg.n_values), [&](const asy::DensityReport& d, json item) {
    for (size_t b = 0; b < d.counts.size(); ++b)
      t.rows.push_back({std::to_string(d.n), num(d.edges[b]), num(d.edges[b + 1]), std::to_string(d.counts[b]),
                        num(d.hist[b]), num(d.model[b])});
    item["ks_distance"] = d.ks_distance;
    item["zeros"] = d.zeros;
    item["outside"] = d.outside;
    item["mass"] = d.mass;
    item["hist"] = d.hist;
    item["model"] = d.model;
    ks.push_back({{"n", d.n}, {"ks_distance", d.ks_distance}});
    rep.add(std::move(item), d.ks_distance < cfg.tol);
  });
  for (const auto& o : outs)
    if (o.value && (!last || o.value->n > last->n)) last = &*o.value;
  rep.summary["ks"] = ks;
  rep.tables.push_back(std::move(t));
  if (cfg.svg && last) {
    std::vector<std::pair<double, double>> curve;
    for (int k = 1; k <= 400; ++k) {
      const double x = k / 400.0;
      curve.emplace_back(x, 2 * asy::density_D(x));
    }
    rep.svg = svg_histogram("scaled zero ordinates, n = " + std::to_string(last->n) + ", against 2 D(t)", last->edges,
                            last->hist, curve);
  }
}

// ---------------------------------------------------------------- arg-track

void run_arg_track(const RunConfig& cfg, RunReport& rep) {
  asy::ArgTrackOptions opt;
  opt.tau = cfg.tau;
  auto outs = parallel_map<asy::ArgTrack>(cfg.n_values.size(), cfg.threads,
                                          [&](size_t i) { return asy::delta_arg_track(cfg.n_values[i], cfg.params, opt); });
  Table t{"",
          {"n", "tau", "grid_points", "psi_part", "phi_part", "laplace_part", "tracked", "predicted", "tolerance", "within",
           "eta", "full_prediction", "count_from_arg", "count_from_density", "count_from_roots"},
          {}};
  collect(rep, outs, n_labels(cfg.n_values), [&](const asy::ArgTrack& a, json item) {
    const std::string roots = a.count_from_roots ? std::to_string(*a.count_from_roots) : "";
    t.rows.push_back({std::to_string(a.n), num(a.tau), std::to_string(a.grid_points), num(a.psi_part), num(a.phi_part),
                      num(a.laplace_part), num(a.tracked), num(a.predicted), num(a.tolerance), boolean(a.within),
                      num(a.eta), num(a.full_prediction), num(a.count_from_arg), num(a.count_from_density), roots});
    item["tau"] = a.tau;
    item["unwrap_ok"] = a.unwrap_ok;
    item["laplace_upper"] = a.laplace_upper;
    item["psi_part"] = a.psi_part;
    item["phi_part"] = a.phi_part;
    item["laplace_part"] = a.laplace_part;
    item["tracked"] = a.tracked;
    item["predicted"] = a.predicted;
    item["tolerance"] = a.tolerance;
    item["within"] = a.within;
    item["eta"] = a.eta;
    item["full_prediction"] = a.full_prediction;
    item["count_from_arg"] = a.count_from_arg;
    item["count_from_density"] = a.count_from_density;
    if (a.count_from_roots) item["count_from_roots"] = *a.count_from_roots;
    rep.add(std::move(item), a.within && a.unwrap_ok);
  });
  rep.tables.push_back(std::move(t));
}

// ---------------------------------------------------------------- appendix-audit

constexpr double kReMin = 0.924256, kImMax = 0.707107, kConstTol = 1e-4;

void run_appendix(const RunConfig& cfg, RunReport& rep) {
  const asy::AppendixReport a = asy::appendix_audit();

  rep.add({{"check", "g(r,s) < 0 on the audit grid"},
           {"points", a.g_points},
           {"counterexamples", a.g_counterexamples},
           {"g_max_scaled", a.g_max},
           {"single_power_nonnegative", a.g_single_power_nonnegative},
           {"single_power_example", {a.single_power_example_r, a.single_power_example_s}},
           {"g_2_1", a.g_2_1}},
          a.g_counterexamples == 0);
  rep.add({{"check", "g(r,1) closed form"}, {"rel_error", a.right_closed_rel_err}}, a.right_closed_rel_err < 1e-8);
  rep.add({{"check", "g(r,1/2-1/(2r^2)) closed form"}, {"rel_error", a.left_closed_rel_err}},
          a.left_closed_rel_err < 1e-8);

  Table ext{"", {"constraint", "source", "sense", "found", "t", "u", "v", "residual"}, {}};
  json all = json::array();
  const asy::Extremum* re_min = nullptr;
  const asy::Extremum* im_max = nullptr;
  for (const auto& e : a.extrema) {
    ext.rows.push_back({e.constraint, e.source, e.sense, boolean(e.found), num(e.t), num(e.u), num(e.v),
                        num(e.constraint_residual)});
    all.push_back({{"constraint", e.constraint}, {"source", e.source}, {"sense", e.sense}, {"found", e.found},
                   {"t", e.t}, {"u", e.u}, {"v", e.v}, {"residual", e.constraint_residual}});
    if (e.source == "direct" && e.found) {
      if (e.constraint == "Re phi_zz = 0" && e.sense == "min") re_min = &e;
      if (e.constraint == "Im phi_zz = 0" && e.sense == "max") im_max = &e;
    }
  }
  rep.summary["extrema"] = all;
  auto constant_item = [&](const asy::Extremum* e, double target, const char* what) {
    json item{{"check", what}, {"target", target}};
    if (!e) {
      item["found"] = false;
      rep.add(std::move(item), false);
      return;
    }
    item["t"] = e->t;
    item["u"] = e->u;
    item["v"] = e->v;
    item["abs_error"] = std::abs(e->t - target);
    rep.add(std::move(item), std::abs(e->t - target) < kConstTol);
  };
  constant_item(re_min, kReMin, "min t subject to Re phi_zz = 0");
  constant_item(im_max, kImMax, "max t subject to Im phi_zz = 0");

  Table rem{"bounds", {"t", "samples", "min_form_violations", "max_form_violations", "im_dz_nonpositive", "sign_mismatch", "L", "z_L"}, {}};
  size_t min_viol = 0, max_viol = 0, samples = 0, mism = 0;
  for (const auto& r : a.bounds) {
    rem.rows.push_back({num(r.t), std::to_string(r.samples), std::to_string(r.min_form_violations),
                        std::to_string(r.max_form_violations), std::to_string(r.im_dz_nonpositive),
                        std::to_string(r.sign_mismatch), num(r.L), num(r.z_L)});
    min_viol += r.min_form_violations;
    max_viol += r.max_form_violations;
    samples += r.samples;
    mism += r.sign_mismatch;
  }
  rep.add({{"check", "Im z'(y) > 0 along traced curves"}, {"failures", a.im_dz_failures}, {"sign_mismatch", mism}},
          a.im_dz_failures == 0 && mism == 0);
  rep.add({{"check", "Im phi_z bound, min(-Im(1/z)/2, y^2-form)"}, {"samples", samples}, {"violations", min_viol}},
          min_viol == 0);
  rep.add({{"check", "Im phi_z bound, max(-Im(1/z)/2, y^2-form)"}, {"samples", samples}, {"violations", max_viol}},
          max_viol == 0);

  Table zs{"zstar", {"t", "z_star", "z_closed", "z_variant", "ln_z", "margin", "im_residual", "re_gap", "holds"}, {}};
  for (const auto& z : asy::z_star_check(cfg.t_values)) {
    zs.rows.push_back({num(z.t), num(z.z_star), num(z.z_closed), num(z.z_variant), num(z.ln_z), num(z.margin),
                       num(z.im_residual), num(z.re_gap), boolean(z.holds)});
    rep.add({{"check", "ln z* < t pi/2"},
             {"t", z.t},
             {"z_star", z.z_star},
             {"z_closed", z.z_closed},
             {"z_variant", z.z_variant},
             {"margin", z.margin},
             {"re_gap", z.re_gap}},
            z.holds);
  }
  rep.tables.push_back(std::move(ext));
  rep.tables.push_back(std::move(rem));
  rep.tables.push_back(std::move(zs));
}

// ---------------------------------------------------------------- emission

void emit(const RunConfig& cfg, const RunReport& rep, std::ostream& out) {
  const json j = rep.to_json();
  if (cfg.out.empty()) {
    if (cfg.format == Format::csv || cfg.format == Format::both)
      for (const auto& t : rep.tables) {
        if (!t.suffix.empty()) out << "# " << t.suffix << '\n';
        out << csv_text(t);
      }
    if (cfg.format == Format::json || cfg.format == Format::both) out << j.dump(2) << '\n';
    return;
  }
  if (cfg.format != Format::json)
    for (const auto& t : rep.tables)
      write_atomic(cfg.out + (t.suffix.empty() ? "" : "_" + t.suffix) + ".csv", csv_text(t));
  if (cfg.format != Format::csv) write_atomic(cfg.out + ".json", j.dump(2) + "\n");
  if (cfg.svg && !rep.svg.empty()) write_atomic(cfg.out + ".svg", rep.svg);
}
}  // namespace

RunReport run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = cfg.command;
  rep.config = echo(cfg);
  switch (cfg.command) {
    case Command::gen: run_gen(cfg, rep); break;
    case Command::q_table: run_q_table(cfg, rep); break;
    case Command::roots: run_roots(cfg, rep, true); break;
    case Command::verify: run_roots(cfg, rep, false); break;
    case Command::interlace: run_interlace(cfg, rep); break;
    case Command::mellin: run_mellin(cfg, rep); break;
    case Command::zeta_id: run_zeta(cfg, rep); break;
    case Command::asymp: run_asymp(cfg, rep); break;
    case Command::density: run_density(cfg, rep); break;
    case Command::arg_track: run_arg_track(cfg, rep); break;
    case Command::appendix_audit: run_appendix(cfg, rep); break;
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sheffer-family zero-line toolkit"};
  std::string command, format = "csv";
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.set_config("--config", "", "key=value file; flags given on the command line win");
  app.add_option("--p", cfg.p, "p as a/b");
  app.add_option("--pstar", cfg.pstar, "p* as a/b");
  // Lists arrive split on commas, from the command line and the config file alike.
  std::vector<std::string> alpha_v, pexp_v, nlist_v, sgrid_v;
  app.add_option("--alpha", alpha_v, "alpha_0,...,alpha_N with increasing magnitudes")->delimiter(',');
  app.add_option("--alpha0", [&](const CLI::results_t& r) {
       // shorthand for the N = 0 family
       alpha_v = {r[0]};
       return true;
     }, "alpha_0 alone (N = 0)");
  app.add_option("--pexp", pexp_v, "p_1,...,p_N")->delimiter(',');
  app.add_option("--n", cfg.n, "degree, or lower end of a range");
  app.add_option("--n-max", cfg.n_max, "upper end of the degree range");
  app.add_option("--n-list", nlist_v, "explicit degree list, e.g. 100,200,400")->delimiter(',');
  app.add_option("--t-min", cfg.t_min);
  app.add_option("--t-max", cfg.t_max);
  app.add_option("--t-steps", cfg.t_steps);
  app.add_option("--s-grid", sgrid_v, "comma-separated s values (a/b or decimal)")->delimiter(',');
  app.add_option("--prec-bits", cfg.prec_bits, "root-finder precision, 0 for the default");
  app.add_option("--tol", cfg.tol, "pass threshold; command-specific default");
  app.add_option("--mode", cfg.mode, "asymp: global | small-t | parity");
  app.add_option("--family", cfg.family, "mellin: bump | meixner | phi | phi_x2");
  app.add_option("--bump-alpha", cfg.bump_alpha);
  app.add_option("--meixner-b", cfg.meixner_b);
  app.add_option("--meixner-c", cfg.meixner_c);
  app.add_option("--bins", cfg.bins);
  app.add_option("--tau", cfg.tau, "arg-track: lower end of the t range");
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  app.add_option("--out", cfg.out, "output prefix; stdout when empty");
  app.add_option("--format", format, "csv | json | both")->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_flag("--svg", cfg.svg, "also write <out>.svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    auto join = [](const std::vector<std::string>& v, std::string& dst) {
      if (v.empty()) return;
      dst.clear();
      for (size_t k = 0; k < v.size(); ++k) dst += (k ? "," : "") + v[k];
    };
    join(alpha_v, cfg.alpha);
    join(pexp_v, cfg.pexp);
    join(nlist_v, cfg.n_list);
    join(sgrid_v, cfg.s_grid);
    cfg.command = parse_command(command);
    cfg.format = format == "json" ? Format::json : format == "both" ? Format::both : Format::csv;
    validate(cfg);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    RunReport rep = run(cfg);
    emit(cfg, rep, out);
    err << to_string(cfg.command) << ": pass=" << rep.pass << " fail=" << rep.fail << " wall_time_s=" << rep.wall_time_s
        << '\n';
    return rep.exit_code();
  } catch (const ConvergenceError& e) {
    err << "non-convergence: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace linezero::cli
