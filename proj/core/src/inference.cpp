#include "primula/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "primula/errors.hpp"
#include "primula/quadrature.hpp"
#include "primula/special_functions.hpp"

namespace primula {
namespace {

// Log of the flat-branch closed form without the incomplete-beta factor:
//   ln(continuous_weight * 2 * C(N,y) * B(y+1, N-y+1)).
// C(N,y) * B(y+1, N-y+1) = 1/(N+1) analytically; composing log_choose with
// log_beta reproduces that cancellation to rounding because log_choose is
// defined through the same log_beta term.
double log_flat_branch_extended(const CrossCount& data, double weight) {
  const auto n = data.n_meioses();
  const auto y = data.n_crossovers();
  return std::log(weight) + std::log(2.0) + log_choose(n, y) +
         log_beta(static_cast<double>(y) + 1.0,
                  static_cast<double>(n - y) + 1.0);
}

void require_flat(const MixturePrior& mixture, const char* op) {
  if (!std::holds_alternative<FlatPrior>(mixture.continuous())) {
    throw UnsupportedPriorError(std::string(op) +
                                ": closed form requires a flat continuous "
                                "component");
  }
}

}  // namespace

LogValue log_likelihood(const CrossCount& data, RecombinationRate rho) {
  const auto n = data.n_meioses();
  const auto y = data.n_crossovers();
  const double r = rho.value();
  if (y > 0 && r == 0.0) {
    return LogValue::zero();
  }
  double log_p = log_choose(n, y);
  if (y > 0) log_p += static_cast<double>(y) * std::log(r);
  if (n - y > 0) log_p += static_cast<double>(n - y) * std::log1p(-r);
  return LogValue::from_log(log_p);
}

MarginalResult marginal_approx_haldane(const CrossCount& data,
                                       const MixturePrior& mixture) {
  require_flat(mixture, "marginal_approx_haldane");
  const double weight = mixture.continuous_weight();
  if (weight == 0.0) {
    return {LogValue::zero(), MarginalMethod::approximation, 0.0};
  }
  return {LogValue::from_log(log_flat_branch_extended(data, weight)),
          MarginalMethod::approximation, 0.0};
}

MarginalResult marginal_exact_haldane(const CrossCount& data,
                                      const MixturePrior& mixture) {
  require_flat(mixture, "marginal_exact_haldane");
  const double weight = mixture.continuous_weight();
  if (weight == 0.0) {
    return {LogValue::zero(), MarginalMethod::closed_form, 0.0};
  }
  const double truncation = reg_inc_beta(
      0.5, static_cast<double>(data.n_crossovers()) + 1.0,
      static_cast<double>(data.n_meioses() - data.n_crossovers()) + 1.0);
  return {LogValue::from_log(log_flat_branch_extended(data, weight) +
                             std::log(truncation)),
          MarginalMethod::closed_form, 0.0};
}

MarginalResult log_marginal_continuous(const CrossCount& data,
                                       const ContinuousPrior& prior) {
  if (!is_proper(prior)) {
    throw ImproperPriorError(
        "log_marginal_continuous: marginal likelihood is undefined under an "
        "improper prior");
  }
  const Interval support = prior_support(prior);

  const auto log_integrand = [&](double r) -> double {
    const RecombinationRate rate(r);
    const double density = prior_density(prior, rate);
    if (!(density > 0.0)) return -std::numeric_limits<double>::infinity();
    const LogValue ll = log_likelihood(data, rate);
    if (ll.is_zero) return -std::numeric_limits<double>::infinity();
    return ll.log_magnitude + std::log(density);
  };

  // Shift by the largest probed log integrand so exp() cannot under- or
  // overflow inside the integrator even at large N.
  constexpr int kProbePoints = 65;
  double shift = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kProbePoints; ++i) {
    const double r =
        support.lo + (support.hi - support.lo) * (i + 0.5) / kProbePoints;
    shift = std::max(shift, log_integrand(r));
  }
  if (data.n_meioses() > 0) {
    const double peak = std::clamp(mle(data).value(), support.lo, support.hi);
    shift = std::max(shift, log_integrand(peak));
  }
  if (shift == -std::numeric_limits<double>::infinity()) shift = 0.0;

  const auto shifted = [&](double r) {
    r = std::clamp(r, support.lo, support.hi);
    const double g = log_integrand(r);
    return g == -std::numeric_limits<double>::infinity()
               ? 0.0
               : std::exp(g - shift);
  };

  const QuadratureResult quad =
      integrate(shifted, support.lo, support.hi, 1e-10, 1e-13);
  return {LogValue::from_log(std::log(quad.value) + shift),
          MarginalMethod::quadrature,
          quad.error_estimate * std::exp(shift)};
}

TestResult bayes_factor_test(const CrossCount& data,
                             const MixturePrior& mixture) {
  const double w = mixture.point_mass_weight();
  if (w == 0.0 || w == 1.0) {
    throw DegenerateHypothesisError(
        "bayes_factor_test: both hypotheses need positive prior mass");
  }
  const MarginalResult linked =
      log_marginal_continuous(data, mixture.continuous());
  const LogValue null_lik =
      log_likelihood(data, mixture.point_mass_location());

  TestResult out;
  out.log_bayes_factor =
      null_lik.is_zero
          ? std::numeric_limits<double>::infinity()
          : linked.log_marginal.log_magnitude - null_lik.log_magnitude;
  out.prior_odds = mixture.continuous_weight() / w;
  const double log_posterior_odds =
      std::log(out.prior_odds) + out.log_bayes_factor;
  out.posterior_odds = out.prior_odds * std::exp(out.log_bayes_factor);
  out.posterior_prob_linked = 1.0 / (1.0 + std::exp(-log_posterior_odds));
  return out;
}

double posterior_density(const CrossCount& data, const ContinuousPrior& prior,
                         RecombinationRate rho) {
  return PosteriorDensity(data, prior)(rho);
}

PosteriorDensity::PosteriorDensity(const CrossCount& data,
                                   ContinuousPrior prior)
    : data_(data),
      prior_(std::move(prior)),
      normalizer_(log_marginal_continuous(data, prior_)) {}

double PosteriorDensity::operator()(RecombinationRate rho) const {
  const Interval support = prior_support(prior_);
  const double r = rho.value();
  if (r < support.lo || r > support.hi) return 0.0;
  const double density = prior_density(prior_, rho);
  if (density == 0.0) return 0.0;
  const LogValue ll = log_likelihood(data_, rho);
  if (ll.is_zero) return 0.0;
  return std::exp(ll.log_magnitude + std::log(density) -
                  normalizer_.log_marginal.log_magnitude);
}

RecombinationRate mle(const CrossCount& data) {
  if (data.n_meioses() == 0) {
    throw NoDataError("mle: no meioses observed");
  }
  const double ratio = static_cast<double>(data.n_crossovers()) /
                       static_cast<double>(data.n_meioses());
  return RecombinationRate(std::min(ratio, 0.5));
}

}  // namespace primula
