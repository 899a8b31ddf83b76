#pragma once

#include <variant>

#include "primula/errors.hpp"
#include "primula/types.hpp"

namespace primula {

/// Flat density 2 on [0, 1/2): equal prior weight on every recombination
/// rate compatible with linkage.
struct FlatPrior {};

/// Beta(alpha, beta) rescaled linearly from [0,1] onto [0, 1/2] (density
/// doubled). ScaledBetaPrior{1,1} coincides with FlatPrior pointwise.
struct ScaledBetaPrior {
  double alpha = 1.0;
  double beta = 1.0;
};

/// The push-forward of a Beta(1,2) locus-separation prior through the
/// mapping function: loci fall uniformly and independently on a chromosome
/// of length L Morgan, so their separation x has density 2(1-x), and
/// rho = (1 - e^(-2Lx))/2 then carries density
///   2 (1 - x(rho)) / (L (1 - 2 rho))   on [0, (1 - e^(-2L))/2].
struct HaldaneDistancePrior {
  double chromosome_length = 1.0;
};

/// Improper density proportional to 1/rho (the alpha -> 0, beta = 1 beta
/// asymptote). Density evaluation only; carries no normalizable mass.
struct ImproperOneOverRhoPrior {};

/// Improper density proportional to 1/(rho (1-rho)) (alpha = beta -> 0).
struct ImproperOneOverRhoOneMinusRhoPrior {};

using ContinuousPrior =
    std::variant<FlatPrior, ScaledBetaPrior, HaldaneDistancePrior,
                 ImproperOneOverRhoPrior, ImproperOneOverRhoOneMinusRhoPrior>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// False for the improper variants; marginal-likelihood consumers must
/// reject those.
bool is_proper(const ContinuousPrior& prior);

/// True when inverse-CDF sampling is available (all proper variants).
bool is_sampleable(const ContinuousPrior& prior);

Interval prior_support(const ContinuousPrior& prior);

/// Density of the prior at rho; zero outside the variant's support. For the
/// improper variants this is the unnormalized density, +infinity at the
/// rho = 0 pole.
double prior_density(const ContinuousPrior& prior, RecombinationRate rho);

/// Beta(1,2) density 2(1-x) of the locus-separation proportion; zero
/// outside [0, 1].
double distance_prior_density(double x);
double distance_prior_density(const GeneticDistance& d);

/// Spike-and-slab prior: a point mass at a null rate (1/2 = unlinked) plus
/// a continuous component over the linked alternative.
class MixturePrior {
 public:
  MixturePrior(double point_mass_weight, RecombinationRate point_mass_location,
               ContinuousPrior continuous);

  double point_mass_weight() const { return point_mass_weight_; }
  double continuous_weight() const { return 1.0 - point_mass_weight_; }
  RecombinationRate point_mass_location() const { return location_; }
  const ContinuousPrior& continuous() const { return continuous_; }

 private:
  double point_mass_weight_;
  RecombinationRate location_;
  ContinuousPrior continuous_;
};

}  // namespace primula
