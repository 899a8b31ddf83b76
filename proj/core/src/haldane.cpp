#include "primula/haldane.hpp"

#include <cmath>
#include <stdexcept>

namespace primula {

double max_recombination_rate(double chromosome_length) {
  if (!(chromosome_length > 0.0)) {
    throw std::invalid_argument("max_recombination_rate: length must be > 0");
  }
  return detail::haldane_rho(1.0, chromosome_length);
}

RecombinationRate haldane_map(const GeneticDistance& d) {
  return RecombinationRate(detail::haldane_rho(d.x(), d.chromosome_length()));
}

GeneticDistance haldane_inverse(RecombinationRate rho,
                                double chromosome_length) {
  if (!(chromosome_length > 0.0)) {
    throw std::invalid_argument("haldane_inverse: length must be > 0");
  }
  if (rho.value() >= 0.5) {
    throw std::domain_error(
        "haldane_inverse: rho = 1/2 means unlinked loci; distance diverges");
  }
  const double x = detail::haldane_distance(rho.value(), chromosome_length);
  if (x > 1.0) {
    throw std::domain_error(
        "haldane_inverse: rho exceeds the rate reachable within one "
        "chromosome length");
  }
  return GeneticDistance(x, chromosome_length);
}

}  // namespace primula
