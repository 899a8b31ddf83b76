#include "primula/priors.hpp"

#include <cmath>
#include <limits>

#include "primula/haldane.hpp"
#include "primula/special_functions.hpp"

namespace primula {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double scaled_beta_density(const ScaledBetaPrior& p, double rho) {
  if (rho < 0.0 || rho > 0.5) return 0.0;
  // u = 2 rho is standard Beta(alpha, beta); the linear rescale doubles the
  // density.
  const double u = 2.0 * rho;
  if (u == 0.0) {
    if (p.alpha < 1.0) return kInf;
    if (p.alpha > 1.0) return 0.0;
    return 2.0 * std::exp(-log_beta(p.alpha, p.beta));  // (1-u)^(b-1) = 1
  }
  if (u == 1.0) {
    if (p.beta < 1.0) return kInf;
    if (p.beta > 1.0) return 0.0;
    return 2.0 * std::exp(-log_beta(p.alpha, p.beta));
  }
  const double log_density = (p.alpha - 1.0) * std::log(u) +
                             (p.beta - 1.0) * std::log1p(-u) -
                             log_beta(p.alpha, p.beta);
  return 2.0 * std::exp(log_density);
}

double haldane_distance_density(const HaldaneDistancePrior& p, double rho) {
  const double upper = max_recombination_rate(p.chromosome_length);
  if (rho < 0.0 || rho > upper) return 0.0;
  // Change of variables through the mapping function:
  //   p(rho) = p_x(x(rho)) |dx/drho| = 2 (1 - x(rho)) / (L (1 - 2 rho)).
  // At L = 1 this is (2 + ln(1 - 2 rho)) / (1 - 2 rho). Finite on the whole
  // support, including the upper endpoint where it reaches 0.
  const double x = detail::haldane_distance(rho, p.chromosome_length);
  const double one_minus_x = std::max(0.0, 1.0 - x);
  return 2.0 * one_minus_x / (p.chromosome_length * (1.0 - 2.0 * rho));
}

}  // namespace

bool is_proper(const ContinuousPrior& prior) {
  return !std::holds_alternative<ImproperOneOverRhoPrior>(prior) &&
         !std::holds_alternative<ImproperOneOverRhoOneMinusRhoPrior>(prior);
}

bool is_sampleable(const ContinuousPrior& prior) { return is_proper(prior); }

Interval prior_support(const ContinuousPrior& prior) {
  if (const auto* h = std::get_if<HaldaneDistancePrior>(&prior)) {
    return {0.0, max_recombination_rate(h->chromosome_length)};
  }
  return {0.0, 0.5};
}

double prior_density(const ContinuousPrior& prior, RecombinationRate rho) {
  const double r = rho.value();
  return std::visit(
      [r](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FlatPrior>) {
          // The endpoint rho = 1/2 is measure zero; report the interior
          // limit.
          return 2.0;
        } else if constexpr (std::is_same_v<T, ScaledBetaPrior>) {
          return scaled_beta_density(p, r);
        } else if constexpr (std::is_same_v<T, HaldaneDistancePrior>) {
          return haldane_distance_density(p, r);
        } else if constexpr (std::is_same_v<T, ImproperOneOverRhoPrior>) {
          return r == 0.0 ? kInf : 1.0 / r;
        } else {
          static_assert(
              std::is_same_v<T, ImproperOneOverRhoOneMinusRhoPrior>);
          return r == 0.0 ? kInf : 1.0 / (r * (1.0 - r));
        }
      },
      prior);
}

double distance_prior_density(double x) {
  if (x < 0.0 || x > 1.0) return 0.0;
  return 2.0 * (1.0 - x);
}

double distance_prior_density(const GeneticDistance& d) {
  return distance_prior_density(d.x());
}

MixturePrior::MixturePrior(double point_mass_weight,
                           RecombinationRate point_mass_location,
                           ContinuousPrior continuous)
    : point_mass_weight_(point_mass_weight),
      location_(point_mass_location),
      continuous_(std::move(continuous)) {
  if (!(point_mass_weight >= 0.0 && point_mass_weight <= 1.0)) {
    throw std::invalid_argument("MixturePrior: weight must be in [0, 1]");
  }
  if (!is_proper(continuous_)) {
    throw ImproperPriorError(
        "MixturePrior: continuous component must be proper");
  }
}

}  // namespace primula
