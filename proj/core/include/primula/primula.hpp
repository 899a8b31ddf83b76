#pragma once

#include "primula/errors.hpp"
#include "primula/haldane.hpp"
#include "primula/inference.hpp"
#include "primula/log_value.hpp"
#include "primula/montecarlo.hpp"
#include "primula/prior_json.hpp"
#include "primula/priors.hpp"
#include "primula/quadrature.hpp"
#include "primula/rng.hpp"
#include "primula/special_functions.hpp"
#include "primula/types.hpp"
