#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "primula/priors.hpp"
#include "primula/rng.hpp"
#include "primula/types.hpp"

namespace primula {

/// Names a reproducible random stream. Identical (seed, stream_id) give
/// bit-identical sample sequences; distinct stream_ids are independent.
struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

inline Xoshiro256PlusPlus engine_for(SeededStream stream) {
  return Xoshiro256PlusPlus(stream.seed, stream.stream_id);
}

/// Beta(1,2) quantile function x = 1 - sqrt(1 - u).
inline double beta12_inverse_cdf(double u) {
  return 1.0 - std::sqrt(1.0 - u);
}

/// n i.i.d. draws of the locus-separation proportion, density 2(1-x).
std::vector<double> sample_distance(SeededStream stream, std::size_t n);

/// n draws from the distance prior pushed through the mapping function;
/// all results lie in [0, (1 - e^(-2L))/2).
std::vector<RecombinationRate> sample_rho(SeededStream stream, std::size_t n,
                                          double chromosome_length = 1.0);

/// Inverse-CDF draws from any sampleable prior (ImproperPriorError
/// otherwise). One uniform is consumed per draw.
std::vector<RecombinationRate> sample_prior(SeededStream stream,
                                            const ContinuousPrior& prior,
                                            std::size_t n);

/// Equal-width histogram normalized to unit area.
struct Histogram {
  std::vector<double> bin_edges;        // size bins + 1
  std::vector<std::uint64_t> counts;    // size bins
  std::vector<double> densities;        // size bins; sum(d_i * width_i) = 1
  std::size_t n_samples = 0;
};

/// Bins samples over [lo, hi]. A sample outside the range raises
/// OutOfRangeSampleError: the supports here are known, so strays are bugs.
Histogram build_histogram(std::span<const double> samples, std::size_t bins,
                          double lo, double hi);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo marginal likelihood: the mean of exp(log likelihood) over n
/// prior draws, accumulated stably by factoring out the largest exponent.
/// Independent of the quadrature path, so the two cross-check each other.
McEstimate mc_marginal(SeededStream stream, const CrossCount& data,
                       const ContinuousPrior& prior, std::size_t n);

/// The prior-distribution figure: histogram of n mapped distance draws over
/// the reachable range [0, (1 - e^(-2L))/2].
Histogram figure_histogram(SeededStream stream, std::size_t n_samples,
                           std::size_t bins, double chromosome_length = 1.0);

/// CSV export: header bin_lo,bin_hi,count,density,analytic_density with
/// analytic_density evaluated at each bin midpoint.
void write_histogram_csv(std::ostream& os, const Histogram& hist,
                         const std::function<double(double)>& analytic_density);

}  // namespace primula
