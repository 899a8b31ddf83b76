#pragma once

#include <string>
#include <string_view>

#include "primula/priors.hpp"

namespace primula {

// JSON prior specifications:
//   {"type": "flat"}
//   {"type": "scaled_beta", "alpha": a, "beta": b}
//   {"type": "haldane_distance", "L": l}          (L optional, default 1)
//   {"type": "improper_1_over_rho"}
//   {"type": "improper_1_over_rho_1mrho"}
// and for mixtures:
//   {"point_mass_weight": w, "point_mass_location": r, "continuous": {...}}
//
// Parse failures (malformed JSON, unknown type, bad parameters) raise
// std::invalid_argument; improper continuous components in a mixture raise
// ImproperPriorError.

ContinuousPrior prior_from_json(std::string_view text);
std::string prior_to_json(const ContinuousPrior& prior);

MixturePrior mixture_from_json(std::string_view text);
std::string mixture_to_json(const MixturePrior& mixture);

}  // namespace primula
