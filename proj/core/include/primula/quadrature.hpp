#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace primula {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t evaluations = 0;
};

/// Raised when the adaptive scheme cannot reach the requested tolerance;
/// carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}

  const QuadratureResult& best_estimate() const { return best_; }

 private:
  QuadratureResult best_;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [lo, hi].
///
/// Converges when the accumulated error estimate drops below
/// max(abs_tol, rel_tol * |value|). Panels are bisected worst-first down to
/// a depth cap of 50. All Kronrod nodes are interior, so f is never
/// evaluated at lo or hi; integrable endpoint singularities are handled by
/// refinement alone. Non-convergence raises ConvergenceError with the best
/// estimate; a non-finite f at an interior node raises std::domain_error.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol = 1e-10,
                           double abs_tol = 0.0);

}  // namespace primula
