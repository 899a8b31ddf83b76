#include "primula/log_value.hpp"

#include <algorithm>
#include <cmath>

namespace primula {

LogValue log_sum_weighted(
    std::span<const std::pair<double, LogValue>> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("log_sum_weighted: need at least one term");
  }
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (const auto& [weight, value] : terms) {
    if (!(weight >= 0.0)) {
      throw std::domain_error("log_sum_weighted: weights must be >= 0");
    }
    if (weight == 0.0 || value.is_zero) continue;
    max_exponent = std::max(max_exponent, std::log(weight) + value.log_magnitude);
  }
  if (max_exponent == -std::numeric_limits<double>::infinity()) {
    return LogValue::zero();
  }
  double sum = 0.0;
  for (const auto& [weight, value] : terms) {
    if (weight == 0.0 || value.is_zero) continue;
    sum += std::exp(std::log(weight) + value.log_magnitude - max_exponent);
  }
  return LogValue::from_log(max_exponent + std::log(sum));
}

}  // namespace primula
