#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "primula/types.hpp"

namespace primula::cli {

enum class Command {
  likelihood,
  marginal,
  bayes_factor,
  prior_density,
  prior_sample,
  posterior_density,
  figure1,
};

enum class OutputFormat { csv, json };

/// One fully resolved invocation. The command-line front end fills in the
/// defaults (the 400-meiosis / 160-crossover primrose data with an 11/12
/// point mass at 1/2 and a flat continuous prior).
struct RunConfig {
  Command command = Command::bayes_factor;
  std::optional<CrossCount> data;
  std::string prior_spec = R"({"type":"flat"})";
  double point_mass_weight = 11.0 / 12.0;
  double point_mass_location = 0.5;
  std::optional<double> rho;      // likelihood evaluation point
  std::string method = "exact";   // marginal: approx | exact | quadrature
  std::uint64_t seed = 42;
  std::uint64_t stream_id = 0;
  std::size_t n_samples = 1000000;
  std::size_t bins = 50;
  std::size_t grid_points = 1000;
  double chromosome_length = 1.0;  // figure1 push-forward
  std::string output_path;         // empty: stdout
  std::optional<OutputFormat> output_format;  // default depends on command
};

/// True for commands that need observed data.
bool requires_data(Command command);

/// Runs one command. Returns 0 on success, 2 on a usage/specification
/// error (malformed prior JSON, improper prior where a proper one is
/// required, missing data, ...), 3 on a numerical failure. Diagnostics go
/// to stderr.
int run(const RunConfig& config);

}  // namespace primula::cli
