#include "primula/prior_json.hpp"

#include <stdexcept>

#include <json.hpp>

namespace primula {
namespace {

using json = nlohmann::ordered_json;

double require_positive(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("prior JSON: missing numeric \"") +
                                key + "\"");
  }
  const double v = j.at(key).get<double>();
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string("prior JSON: \"") + key +
                                "\" must be > 0");
  }
  return v;
}

ContinuousPrior parse_prior(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw std::invalid_argument(
        "prior JSON: expected an object with a \"type\" string");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "flat") {
    return FlatPrior{};
  }
  if (type == "scaled_beta") {
    return ScaledBetaPrior{require_positive(j, "alpha"),
                           require_positive(j, "beta")};
  }
  if (type == "haldane_distance") {
    if (j.contains("L")) {
      return HaldaneDistancePrior{require_positive(j, "L")};
    }
    return HaldaneDistancePrior{};
  }
  if (type == "improper_1_over_rho") {
    return ImproperOneOverRhoPrior{};
  }
  if (type == "improper_1_over_rho_1mrho") {
    return ImproperOneOverRhoOneMinusRhoPrior{};
  }
  throw std::invalid_argument("prior JSON: unknown type \"" + type + "\"");
}

json prior_json(const ContinuousPrior& prior) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FlatPrior>) {
          return json{{"type", "flat"}};
        } else if constexpr (std::is_same_v<T, ScaledBetaPrior>) {
          return json{{"type", "scaled_beta"},
                      {"alpha", p.alpha},
                      {"beta", p.beta}};
        } else if constexpr (std::is_same_v<T, HaldaneDistancePrior>) {
          return json{{"type", "haldane_distance"},
                      {"L", p.chromosome_length}};
        } else if constexpr (std::is_same_v<T, ImproperOneOverRhoPrior>) {
          return json{{"type", "improper_1_over_rho"}};
        } else {
          return json{{"type", "improper_1_over_rho_1mrho"}};
        }
      },
      prior);
}

json parse_text(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("prior JSON: malformed document");
  }
  return j;
}

}  // namespace

ContinuousPrior prior_from_json(std::string_view text) {
  return parse_prior(parse_text(text));
}

std::string prior_to_json(const ContinuousPrior& prior) {
  return prior_json(prior).dump();
}

MixturePrior mixture_from_json(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("point_mass_weight") ||
      !j.at("point_mass_weight").is_number() || !j.contains("continuous")) {
    throw std::invalid_argument(
        "mixture JSON: need point_mass_weight and continuous");
  }
  const double weight = j.at("point_mass_weight").get<double>();
  double location = 0.5;
  if (j.contains("point_mass_location")) {
    if (!j.at("point_mass_location").is_number()) {
      throw std::invalid_argument("mixture JSON: bad point_mass_location");
    }
    location = j.at("point_mass_location").get<double>();
  }
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument(
        "mixture JSON: point_mass_weight must be in [0, 1]");
  }
  if (!(location >= 0.0 && location <= 0.5)) {
    throw std::invalid_argument(
        "mixture JSON: point_mass_location must be in [0, 1/2]");
  }
  return MixturePrior(weight, RecombinationRate(location),
                      parse_prior(j.at("continuous")));
}

std::string mixture_to_json(const MixturePrior& mixture) {
  json j{{"point_mass_weight", mixture.point_mass_weight()},
         {"point_mass_location", mixture.point_mass_location().value()},
         {"continuous", prior_json(mixture.continuous())}};
  return j.dump();
}

}  // namespace primula
