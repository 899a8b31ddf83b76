#include <cstdint>
#include <optional>

#include <CLI11.hpp>

#include "run_config.hpp"

namespace {

using primula::cli::Command;
using primula::cli::OutputFormat;
using primula::cli::RunConfig;

struct RawOptions {
  std::int64_t n = 400;
  std::int64_t y = 160;
  std::string prior = R"({"type":"flat"})";
  double point_mass_weight = 11.0 / 12.0;
  double point_mass_location = 0.5;
  double rho = 0.5;
  std::string method = "exact";
  std::uint64_t seed = 42;
  std::uint64_t stream = 0;
  std::size_t n_samples = 1000000;
  std::size_t bins = 50;
  std::size_t grid = 1000;
  double length = 1.0;
  std::string out;
  std::string format;
};

void add_data_options(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--n", raw.n, "Number of observed meioses")
      ->capture_default_str();
  cmd.add_option("--y", raw.y, "Number of observed crossovers")
      ->capture_default_str();
}

void add_prior_option(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--prior", raw.prior,
                 "Continuous prior as JSON, e.g. '{\"type\":\"flat\"}' or "
                 "'{\"type\":\"haldane_distance\",\"L\":1}'")
      ->capture_default_str();
}

void add_output_options(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--out", raw.out, "Write output to this file instead of stdout");
  cmd.add_option("--format", raw.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

RunConfig to_config(Command command, const RawOptions& raw) {
  RunConfig config;
  config.command = command;
  config.prior_spec = raw.prior;
  config.point_mass_weight = raw.point_mass_weight;
  config.point_mass_location = raw.point_mass_location;
  config.method = raw.method;
  config.seed = raw.seed;
  config.stream_id = raw.stream;
  config.n_samples = raw.n_samples;
  config.bins = raw.bins;
  config.grid_points = raw.grid;
  config.chromosome_length = raw.length;
  config.output_path = raw.out;
  if (!raw.format.empty()) {
    config.output_format =
        raw.format == "json" ? OutputFormat::json : OutputFormat::csv;
  }
  if (primula::cli::requires_data(command)) {
    config.data = primula::CrossCount(raw.n, raw.y);
  }
  if (command == Command::likelihood) {
    config.rho = raw.rho;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bayes factor tests for genetic linkage from binomial crossover "
      "counts"};
  app.require_subcommand(1);
  RawOptions raw;

  CLI::App* likelihood = app.add_subcommand(
      "likelihood", "Binomial likelihood of the data at a fixed rate");
  add_data_options(*likelihood, raw);
  likelihood->add_option("--rho", raw.rho, "Recombination rate in [0, 1/2]")
      ->capture_default_str();
  add_output_options(*likelihood, raw);

  CLI::App* marginal = app.add_subcommand(
      "marginal",
      "Linkage branch of the mixture marginal likelihood of the data");
  add_data_options(*marginal, raw);
  add_prior_option(*marginal, raw);
  marginal->add_option("--point-mass-weight", raw.point_mass_weight,
                       "Prior mass on the unlinked point hypothesis")
      ->capture_default_str();
  marginal
      ->add_option("--method", raw.method,
                   "approx (upper limit extended to 1), exact (closed form), "
                   "or quadrature")
      ->check(CLI::IsMember({"approx", "exact", "quadrature"}))
      ->capture_default_str();
  add_output_options(*marginal, raw);

  CLI::App* bayes = app.add_subcommand(
      "bayes-factor", "Linked-vs-unlinked Bayes factor and posterior odds");
  add_data_options(*bayes, raw);
  add_prior_option(*bayes, raw);
  bayes->add_option("--point-mass-weight", raw.point_mass_weight,
                    "Prior mass on the unlinked point hypothesis")
      ->capture_default_str();
  bayes->add_option("--point-mass-location", raw.point_mass_location,
                    "Location of the point mass (1/2 = free recombination)")
      ->capture_default_str();
  add_output_options(*bayes, raw);

  CLI::App* prior_density = app.add_subcommand(
      "prior-density", "Tabulate a prior density over its support");
  add_prior_option(*prior_density, raw);
  prior_density->add_option("--grid", raw.grid, "Number of grid points")
      ->capture_default_str();
  add_output_options(*prior_density, raw);

  CLI::App* prior_sample = app.add_subcommand(
      "prior-sample", "Draw reproducible samples from a prior");
  add_prior_option(*prior_sample, raw);
  prior_sample->add_option("--n-samples", raw.n_samples, "Number of draws")
      ->capture_default_str();
  prior_sample->add_option("--seed", raw.seed, "64-bit RNG seed")
      ->capture_default_str();
  prior_sample->add_option("--stream", raw.stream, "RNG stream id")
      ->capture_default_str();
  add_output_options(*prior_sample, raw);

  CLI::App* posterior = app.add_subcommand(
      "posterior-density", "Tabulate the posterior density of the rate");
  add_data_options(*posterior, raw);
  add_prior_option(*posterior, raw);
  posterior->add_option("--grid", raw.grid, "Number of grid points")
      ->capture_default_str();
  add_output_options(*posterior, raw);

  CLI::App* figure1 = app.add_subcommand(
      "figure1",
      "Histogram of the mapped distance prior vs. its analytic density");
  figure1->add_option("--n-samples", raw.n_samples, "Number of draws")
      ->capture_default_str();
  figure1->add_option("--bins", raw.bins, "Number of histogram bins")
      ->capture_default_str();
  figure1->add_option("--seed", raw.seed, "64-bit RNG seed")
      ->capture_default_str();
  figure1->add_option("--stream", raw.stream, "RNG stream id")
      ->capture_default_str();
  figure1->add_option("--L", raw.length, "Chromosome length in Morgan")
      ->capture_default_str();
  add_output_options(*figure1, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Command command = Command::figure1;
  if (likelihood->parsed()) {
    command = Command::likelihood;
  } else if (marginal->parsed()) {
    command = Command::marginal;
  } else if (bayes->parsed()) {
    command = Command::bayes_factor;
  } else if (prior_density->parsed()) {
    command = Command::prior_density;
  } else if (prior_sample->parsed()) {
    command = Command::prior_sample;
  } else if (posterior->parsed()) {
    command = Command::posterior_density;
  }

  try {
    return primula::cli::run(to_config(command, raw));
  } catch (const std::exception& e) {
    // Config construction failures (bad counts, rates, ...) are usage errors.
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
