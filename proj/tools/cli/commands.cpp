#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "primula/primula.hpp"
#include "run_config.hpp"

namespace primula::cli {
namespace {

using json = nlohmann::ordered_json;

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output_path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + config.output_path);
  }
  out << text;
}

OutputFormat effective_format(const RunConfig& config) {
  if (config.output_format) return *config.output_format;
  switch (config.command) {
    case Command::likelihood:
    case Command::marginal:
    case Command::bayes_factor:
      return OutputFormat::json;
    default:
      return OutputFormat::csv;
  }
}

// Scalar results: a JSON object, or a two-line CSV with the same keys.
std::string render_scalar(const RunConfig& config, const json& fields) {
  if (effective_format(config) == OutputFormat::json) {
    return fields.dump(2) + "\n";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : fields.items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  first = true;
  for (const auto& [key, value] : fields.items()) {
    os << (first ? "" : ",");
    first = false;
    if (value.is_number_float()) {
      os << format_value(value.get<double>());
    } else {
      os << value.dump();
    }
  }
  os << '\n';
  return os.str();
}

// Tabular results: CSV by default, or a JSON array of row objects.
std::string render_table(const RunConfig& config,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows) {
  if (effective_format(config) == OutputFormat::json) {
    json out = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
      out.push_back(std::move(obj));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    os << (c ? "," : "") << columns[c];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << format_value(row[c]);
    }
    os << '\n';
  }
  return os.str();
}

CrossCount required_data(const RunConfig& config) {
  if (!config.data) {
    throw std::invalid_argument("this command requires --n and --y");
  }
  return *config.data;
}

MixturePrior mixture_from_config(const RunConfig& config) {
  return MixturePrior(config.point_mass_weight,
                      RecombinationRate(config.point_mass_location),
                      prior_from_json(config.prior_spec));
}

void run_likelihood(const RunConfig& config) {
  const CrossCount data = required_data(config);
  const double rho = config.rho.value_or(0.5);
  const LogValue ll = log_likelihood(data, RecombinationRate(rho));
  json fields;
  fields["n"] = data.n_meioses();
  fields["y"] = data.n_crossovers();
  fields["rho"] = rho;
  fields["is_zero"] = ll.is_zero;
  if (ll.is_zero) {
    fields["log_likelihood"] = nullptr;
  } else {
    fields["log_likelihood"] = ll.log_magnitude;
  }
  fields["likelihood"] = ll.linear();
  emit(config, render_scalar(config, fields));
}

void run_marginal(const RunConfig& config) {
  const CrossCount data = required_data(config);
  const MixturePrior mixture = mixture_from_config(config);

  MarginalResult result;
  if (config.method == "approx") {
    result = marginal_approx_haldane(data, mixture);
  } else if (config.method == "exact") {
    result = marginal_exact_haldane(data, mixture);
  } else if (config.method == "quadrature") {
    // Same convention as the closed forms: the linkage branch of the
    // mixture marginal, i.e. the prior marginal weighted by the continuous
    // component's mass.
    const MarginalResult inner =
        log_marginal_continuous(data, mixture.continuous());
    const double weight = mixture.continuous_weight();
    result.method = MarginalMethod::quadrature;
    if (weight == 0.0 || inner.log_marginal.is_zero) {
      result.log_marginal = LogValue::zero();
      result.error_estimate = 0.0;
    } else {
      result.log_marginal = LogValue::from_log(
          inner.log_marginal.log_magnitude + std::log(weight));
      result.error_estimate = inner.error_estimate * weight;
    }
  } else {
    throw std::invalid_argument(
        "--method must be approx, exact, or quadrature");
  }

  json fields;
  fields["n"] = data.n_meioses();
  fields["y"] = data.n_crossovers();
  fields["point_mass_weight"] = config.point_mass_weight;
  fields["method"] = config.method;
  if (result.log_marginal.is_zero) {
    fields["log_marginal"] = nullptr;
  } else {
    fields["log_marginal"] = result.log_marginal.log_magnitude;
  }
  fields["marginal"] = result.log_marginal.linear();
  fields["error_estimate"] = result.error_estimate;
  emit(config, render_scalar(config, fields));
}

void run_bayes_factor(const RunConfig& config) {
  const CrossCount data = required_data(config);
  const MixturePrior mixture = mixture_from_config(config);
  const TestResult test = bayes_factor_test(data, mixture);

  json fields;
  fields["n"] = data.n_meioses();
  fields["y"] = data.n_crossovers();
  fields["point_mass_weight"] = config.point_mass_weight;
  fields["point_mass_location"] = config.point_mass_location;
  fields["prior"] = json::parse(prior_to_json(mixture.continuous()));
  fields["log_bf"] = test.log_bayes_factor;
  fields["bf"] = std::exp(test.log_bayes_factor);
  fields["prior_odds"] = test.prior_odds;
  fields["posterior_odds"] = test.posterior_odds;
  fields["posterior_prob_linked"] = test.posterior_prob_linked;
  if (std::holds_alternative<FlatPrior>(mixture.continuous())) {
    fields["log_marginal_exact"] =
        marginal_exact_haldane(data, mixture).log_marginal.log_magnitude;
    fields["log_marginal_approx"] =
        marginal_approx_haldane(data, mixture).log_marginal.log_magnitude;
  }
  emit(config, render_scalar(config, fields));
}

void run_prior_density(const RunConfig& config) {
  const ContinuousPrior prior = prior_from_json(config.prior_spec);
  if (config.grid_points < 2) {
    throw std::invalid_argument("--grid must be >= 2");
  }
  const Interval support = prior_support(prior);
  std::vector<std::vector<double>> rows;
  rows.reserve(config.grid_points);
  for (std::size_t i = 0; i < config.grid_points; ++i) {
    const double rho = support.lo + (support.hi - support.lo) *
                                        static_cast<double>(i) /
                                        static_cast<double>(config.grid_points - 1);
    rows.push_back({rho, prior_density(prior, RecombinationRate(rho))});
  }
  emit(config, render_table(config, {"rho", "density"}, rows));
}

void run_prior_sample(const RunConfig& config) {
  const ContinuousPrior prior = prior_from_json(config.prior_spec);
  const std::vector<RecombinationRate> samples = sample_prior(
      SeededStream{config.seed, config.stream_id}, prior, config.n_samples);
  std::vector<std::vector<double>> rows;
  rows.reserve(samples.size());
  for (RecombinationRate r : samples) rows.push_back({r.value()});
  emit(config, render_table(config, {"rho"}, rows));
}

void run_posterior_density(const RunConfig& config) {
  const CrossCount data = required_data(config);
  const ContinuousPrior prior = prior_from_json(config.prior_spec);
  if (config.grid_points < 2) {
    throw std::invalid_argument("--grid must be >= 2");
  }
  const PosteriorDensity posterior(data, prior);
  const Interval support = prior_support(prior);
  std::vector<std::vector<double>> rows;
  rows.reserve(config.grid_points);
  for (std::size_t i = 0; i < config.grid_points; ++i) {
    const double rho = support.lo + (support.hi - support.lo) *
                                        static_cast<double>(i) /
                                        static_cast<double>(config.grid_points - 1);
    rows.push_back({rho, posterior(RecombinationRate(rho))});
  }
  emit(config, render_table(config, {"rho", "density"}, rows));
}

void run_figure1(const RunConfig& config) {
  const Histogram hist =
      figure_histogram(SeededStream{config.seed, config.stream_id},
                       config.n_samples, config.bins, config.chromosome_length);
  const HaldaneDistancePrior prior{config.chromosome_length};
  std::ostringstream os;
  write_histogram_csv(os, hist, [&](double rho) {
    return prior_density(ContinuousPrior(prior), RecombinationRate(rho));
  });
  emit(config, os.str());
}

}  // namespace

bool requires_data(Command command) {
  switch (command) {
    case Command::likelihood:
    case Command::marginal:
    case Command::bayes_factor:
    case Command::posterior_density:
      return true;
    default:
      return false;
  }
}

int run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::likelihood:
        run_likelihood(config);
        break;
      case Command::marginal:
        run_marginal(config);
        break;
      case Command::bayes_factor:
        run_bayes_factor(config);
        break;
      case Command::prior_density:
        run_prior_density(config);
        break;
      case Command::prior_sample:
        run_prior_sample(config);
        break;
      case Command::posterior_density:
        run_posterior_density(config);
        break;
      case Command::figure1:
        run_figure1(config);
        break;
    }
    return 0;
  } catch (const ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace primula::cli
