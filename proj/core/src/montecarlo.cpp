#include "primula/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "primula/errors.hpp"
#include "primula/haldane.hpp"
#include "primula/inference.hpp"
#include "primula/special_functions.hpp"

namespace primula {
namespace {

// One prior draw from a uniform; the quantile transforms are exact closed
// forms except for the scaled beta, which inverts the CDF by deterministic
// bisection.
double quantile(const ContinuousPrior& prior, double u) {
  return std::visit(
      [u](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FlatPrior>) {
          return 0.5 * u;
        } else if constexpr (std::is_same_v<T, ScaledBetaPrior>) {
          return 0.5 * inv_reg_inc_beta(u, p.alpha, p.beta);
        } else if constexpr (std::is_same_v<T, HaldaneDistancePrior>) {
          return detail::haldane_rho(beta12_inverse_cdf(u),
                                     p.chromosome_length);
        } else {
          throw ImproperPriorError(
              "mc_marginal: cannot sample an improper prior");
        }
      },
      prior);
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<double> sample_distance(SeededStream stream, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("sample_distance: need n >= 1");
  }
  Xoshiro256PlusPlus rng = engine_for(stream);
  std::vector<double> out(n);
  for (double& x : out) x = beta12_inverse_cdf(rng.uniform());
  return out;
}

std::vector<RecombinationRate> sample_rho(SeededStream stream, std::size_t n,
                                          double chromosome_length) {
  const std::vector<double> distances = sample_distance(stream, n);
  std::vector<RecombinationRate> out;
  out.reserve(n);
  for (double x : distances) {
    out.emplace_back(detail::haldane_rho(x, chromosome_length));
  }
  return out;
}

std::vector<RecombinationRate> sample_prior(SeededStream stream,
                                            const ContinuousPrior& prior,
                                            std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("sample_prior: need n >= 1");
  }
  Xoshiro256PlusPlus rng = engine_for(stream);
  std::vector<RecombinationRate> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(quantile(prior, rng.uniform()));
  }
  return out;
}

Histogram build_histogram(std::span<const double> samples, std::size_t bins,
                          double lo, double hi) {
  if (samples.empty()) {
    throw std::invalid_argument("build_histogram: no samples");
  }
  if (bins < 1) {
    throw std::invalid_argument("build_histogram: need bins >= 1");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("build_histogram: need lo < hi");
  }

  Histogram hist;
  hist.n_samples = samples.size();
  hist.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    hist.bin_edges[i] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  hist.bin_edges.front() = lo;
  hist.bin_edges.back() = hi;

  hist.counts.assign(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double s : samples) {
    if (!(s >= lo && s <= hi)) {
      throw OutOfRangeSampleError("build_histogram: sample " +
                                  format_value(s) + " outside [" +
                                  format_value(lo) + ", " + format_value(hi) +
                                  "]");
    }
    auto index = static_cast<std::size_t>((s - lo) / width);
    if (index >= bins) index = bins - 1;
    ++hist.counts[index];
  }

  hist.densities.resize(bins);
  const double total = static_cast<double>(hist.n_samples);
  for (std::size_t i = 0; i < bins; ++i) {
    const double bin_width = hist.bin_edges[i + 1] - hist.bin_edges[i];
    hist.densities[i] = static_cast<double>(hist.counts[i]) / (total * bin_width);
  }
  return hist;
}

McEstimate mc_marginal(SeededStream stream, const CrossCount& data,
                       const ContinuousPrior& prior, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("mc_marginal: need n >= 1");
  }
  if (!is_proper(prior)) {
    throw ImproperPriorError(
        "mc_marginal: marginal likelihood is undefined under an improper "
        "prior");
  }

  Xoshiro256PlusPlus rng = engine_for(stream);
  std::vector<double> log_liks(n);
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const RecombinationRate rho(quantile(prior, rng.uniform()));
    const LogValue ll = log_likelihood(data, rho);
    log_liks[i] =
        ll.is_zero ? -std::numeric_limits<double>::infinity() : ll.log_magnitude;
    max_log = std::max(max_log, log_liks[i]);
  }
  if (max_log == -std::numeric_limits<double>::infinity()) {
    return {0.0, 0.0};
  }

  double sum = 0.0;
  for (double l : log_liks) sum += std::exp(l - max_log);
  const double mean_scaled = sum / static_cast<double>(n);

  double sq = 0.0;
  for (double l : log_liks) {
    const double d = std::exp(l - max_log) - mean_scaled;
    sq += d * d;
  }
  const double scale = std::exp(max_log);
  McEstimate out;
  out.estimate = scale * mean_scaled;
  out.std_error =
      n > 1 ? scale * std::sqrt(sq / (static_cast<double>(n - 1) *
                                      static_cast<double>(n)))
            : 0.0;
  return out;
}

Histogram figure_histogram(SeededStream stream, std::size_t n_samples,
                           std::size_t bins, double chromosome_length) {
  const std::vector<RecombinationRate> rho =
      sample_rho(stream, n_samples, chromosome_length);
  std::vector<double> values;
  values.reserve(rho.size());
  for (RecombinationRate r : rho) values.push_back(r.value());
  return build_histogram(values, bins, 0.0,
                         max_recombination_rate(chromosome_length));
}

void write_histogram_csv(
    std::ostream& os, const Histogram& hist,
    const std::function<double(double)>& analytic_density) {
  os << "bin_lo,bin_hi,count,density,analytic_density\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double lo = hist.bin_edges[i];
    const double hi = hist.bin_edges[i + 1];
    const double mid = 0.5 * (lo + hi);
    os << format_value(lo) << ',' << format_value(hi) << ','
       << hist.counts[i] << ',' << format_value(hist.densities[i]) << ','
       << format_value(analytic_density(mid)) << '\n';
  }
}

}  // namespace primula
