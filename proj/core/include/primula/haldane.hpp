#pragma once

#include <cmath>

#include "primula/types.hpp"

namespace primula {

namespace detail {
// Raw-double map and inverse, shared by density evaluation and sampling.
inline double haldane_rho(double x, double length) {
  return -std::expm1(-2.0 * length * x) / 2.0;
}
inline double haldane_distance(double rho, double length) {
  return -std::log1p(-2.0 * rho) / (2.0 * length);
}
}  // namespace detail

/// Largest recombination rate reachable within one chromosome of length L:
/// the image of x = 1 under the mapping function, (1 - e^(-2L)) / 2.
double max_recombination_rate(double chromosome_length);

/// Haldane's mapping function rho = (1 - e^(-2Lx)) / 2, converting additive
/// map distance to recombination probability under a no-interference
/// crossover model. Strictly increasing in x.
RecombinationRate haldane_map(const GeneticDistance& d);

/// Inverse mapping x = -ln(1 - 2 rho) / (2L). rho = 1/2 has no finite
/// preimage (unlinked loci); rho beyond max_recombination_rate(L) would need
/// x > 1 and is rejected as well.
GeneticDistance haldane_inverse(RecombinationRate rho, double chromosome_length);

}  // namespace primula
