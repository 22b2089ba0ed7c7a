#include "linezero/special/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace linezero::special {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Shared driver for the double-exponential rules: node(tau) returns the
// abscissa and the Jacobian; the rule sums over tau = k h.
template <class Node>
QuadResult de_rule(const Integrand& f, Node node, double tau_max, const QuadOptions& opt) {
  QuadResult out;
  auto eval = [&](double tau) -> cplx {
    auto [x, w] = node(tau);
    if (w == 0 || !std::isfinite(w)) return 0;
    cplx v = f(x);
    ++out.evaluations;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return 0;
    return v * w;
  };

  // Level 0 (h = 1), walking outward until contributions die out so the
  // working range adapts to the integrand's decay.
  double h = 1.0;
  cplx sum = eval(0.0);
  double lo = 0, hi = 0;
  for (int dir : {1, -1}) {
    int small = 0;
    for (double tau = dir; std::fabs(tau) <= tau_max; tau += dir) {
      cplx v = eval(tau);
      sum += v;
      (dir > 0 ? hi : lo) = tau;
      if (std::abs(v) <= 1e-20 * std::abs(sum)) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
  }
  lo -= 1;
  hi += 1;
  cplx prev = sum * h;
  for (int level = 1; level <= opt.max_levels; ++level) {
    h /= 2;
    cplx add = 0;
    for (double tau = lo + h; tau < hi; tau += 2 * h) add += eval(tau);
    sum += add;
    cplx cur = sum * h;
    double err = std::abs(cur - prev);
    out.value = cur;
    out.abs_error_estimate = err;
    out.levels = level;
    if (level >= 3 && err <= std::max(opt.abstol, opt.reltol * std::abs(cur))) {
      out.converged = true;
      return out;
    }
    if (out.evaluations > opt.max_evaluations) break;
    prev = cur;
  }
  return out;
}

}  // namespace

QuadResult integrate_exp_sinh(const Integrand& f, double a, const QuadOptions& opt) {
  auto node = [a](double tau) -> std::pair<double, double> {
    double e = std::exp(kHalfPi * std::sinh(tau));
    return {a + e, e * kHalfPi * std::cosh(tau)};
  };
  return de_rule(f, node, 7.0, opt);
}

QuadResult integrate_tanh_sinh(const Integrand& f, double a, double b, const QuadOptions& opt) {
  const double mid = (a + b) / 2, half = (b - a) / 2;
  auto node = [=](double tau) -> std::pair<double, double> {
    double u = kHalfPi * std::sinh(tau);
    double c = std::cosh(u);
    // 1 -+ tanh u = e^{-+u} / cosh u keeps nodes near the endpoints exact.
    double x = tau >= 0 ? b - half * std::exp(-u) / c : a + half * std::exp(u) / c;
    double w = half * kHalfPi * std::cosh(tau) / (c * c);
    if (x <= a || x >= b) return {mid, 0.0};
    return {x, w};
  };
  return de_rule(f, node, 4.5, opt);
}

namespace {

constexpr std::array<double, 8> kXk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                   0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const Integrand& f, double a, double b, size_t& evals) {
  const double c = (a + b) / 2, h = (b - a) / 2;
  cplx fc = f(c);
  cplx k = fc * kWk[7], g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    cplx f1 = f(c - h * kXk[j]), f2 = f(c + h * kXk[j]);
    k += (f1 + f2) * kWk[j];
    if (j % 2 == 1) g += (f1 + f2) * kWg[j / 2];
  }
  evals += 15;
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadResult integrate_gauss_kronrod(const Integrand& f, double a, double b, const QuadOptions& opt) {
  QuadResult out;
  std::priority_queue<Panel> heap;
  Panel first = gk15(f, a, b, out.evaluations);
  heap.push(first);
  cplx total = first.value;
  double err = first.err;
  while (err > std::max(opt.abstol, opt.reltol * std::abs(total)) && out.evaluations < opt.max_evaluations) {
    Panel worst = heap.top();
    heap.pop();
    double m = (worst.a + worst.b) / 2;
    if (!(m > worst.a && m < worst.b)) {
      heap.push(worst);
      break;
    }
    Panel l = gk15(f, worst.a, m, out.evaluations), r = gk15(f, m, worst.b, out.evaluations);
    total += l.value + r.value - worst.value;
    err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
    ++out.levels;
  }
  // Re-sum to shed accumulated drift from the running updates.
  total = 0;
  err = 0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().err;
    heap.pop();
  }
  out.value = total;
  out.abs_error_estimate = err;
  out.converged = err <= std::max(opt.abstol, opt.reltol * std::abs(total));
  return out;
}

}  // namespace linezero::special
