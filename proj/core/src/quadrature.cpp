#include "primula/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace primula {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Abscissae are for the half-interval [0, 1]; the rule is symmetric.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  int depth = 0;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const {
    return a.error < b.error;
  }
};

// One K15/G7 application over [lo, hi]. The error estimate follows the
// QUADPACK rescaling of |K - G| so that spiky integrands are not
// underestimated.
Panel evaluate_panel(const std::function<double(double)>& f, double lo,
                     double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  // fv[0..6] pair up the symmetric Kronrod nodes 0..6; fv[14] is the center.
  double resk = 0.0;
  double resg = 0.0;
  double resabs = 0.0;
  const double fc = f(center);
  resk = kWgk[7] * fc;
  resg = kWg[3] * fc;
  resabs = std::abs(resk);
  fv[14] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    const double fsum = f1 + f2;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) {
      // Odd-index Kronrod nodes are the Gauss nodes.
      resg += kWg[j / 2] * fsum;
    }
  }
  for (double v : fv) {
    if (!std::isfinite(v)) {
      throw std::domain_error(
          "integrate: integrand is not finite at an interior node");
    }
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] *
              (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));
  }
  resasc *= half;
  resabs *= half;

  double err = std::abs(resk - resg) * half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double round_floor =
      50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, round_floor);

  return Panel{lo, hi, resk * half, err, depth};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol, double abs_tol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("integrate: need lo < hi");
  }
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || (rel_tol == 0.0 && abs_tol == 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be >= 0, not both 0");
  }

  constexpr int kMaxDepth = 50;
  constexpr std::size_t kMaxPanels = 20000;

  std::size_t evaluations = 15;
  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  active.push(evaluate_panel(f, lo, hi, 0));

  // Panels at the depth cap no longer participate in refinement.
  double frozen_value = 0.0;
  double frozen_error = 0.0;
  std::size_t frozen_count = 0;

  auto totals = [&] {
    // Recompute from the heap so the running sums cannot drift.
    double value = frozen_value;
    double error = frozen_error;
    std::priority_queue<Panel, std::vector<Panel>, ByError> copy = active;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return QuadratureResult{value, error, evaluations};
  };

  double value = frozen_value + active.top().value;
  double error = frozen_error + active.top().error;
  while (true) {
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
      QuadratureResult out = totals();
      out.error_estimate = std::max(out.error_estimate, 0.0);
      return out;
    }
    if (active.empty() || frozen_count + active.size() >= kMaxPanels) {
      throw ConvergenceError(
          "integrate: tolerance not reached before subdivision limit",
          totals());
    }
    const Panel worst = active.top();
    active.pop();
    value -= worst.value;
    error -= worst.error;
    if (worst.depth >= kMaxDepth) {
      frozen_value += worst.value;
      frozen_error += worst.error;
      ++frozen_count;
      value += worst.value;
      error += worst.error;
      if (active.empty()) {
        throw ConvergenceError(
            "integrate: tolerance not reached at maximum refinement depth",
            totals());
      }
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = evaluate_panel(f, worst.lo, mid, worst.depth + 1);
    const Panel right = evaluate_panel(f, mid, worst.hi, worst.depth + 1);
    evaluations += 30;
    active.push(left);
    active.push(right);
    value += left.value + right.value;
    error += left.error + right.error;
  }
}

}  // namespace primula
