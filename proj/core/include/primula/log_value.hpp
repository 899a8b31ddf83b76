#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>

namespace primula {

/// A nonnegative real carried in natural-log space. Likelihoods and
/// marginals stay in this representation end to end; conversion to linear
/// scale happens only at the reporting boundary, so quantities like
/// C(400,160) never overflow a double.
struct LogValue {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  bool is_zero = false;

  static LogValue zero() { return {0.0, true}; }

  static LogValue from_log(double log_magnitude) {
    return {log_magnitude, false};
  }

  /// Wraps a linear-scale value v >= 0.
  static LogValue from_linear(double v) {
    if (v < 0.0 || std::isnan(v)) {
      throw std::domain_error("LogValue::from_linear: value must be >= 0");
    }
    if (v == 0.0) return zero();
    return {std::log(v), false};
  }

  /// Linear-scale value; may overflow to +inf for large magnitudes.
  double linear() const { return is_zero ? 0.0 : std::exp(log_magnitude); }
};

/// log of sum(w_i * exp(v_i)) for nonnegative weights, computed by factoring
/// out the largest exponent. Returns a zero LogValue when every term
/// vanishes.
LogValue log_sum_weighted(std::span<const std::pair<double, LogValue>> terms);

inline LogValue log_sum_weighted(
    std::initializer_list<std::pair<double, LogValue>> terms) {
  return log_sum_weighted(
      std::span<const std::pair<double, LogValue>>(terms.begin(), terms.size()));
}

}  // namespace primula
