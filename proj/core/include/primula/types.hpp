#pragma once

#include <cstdint>
#include <stdexcept>

namespace primula {

/// Observed crossover data: N meioses, y of them recombinant.
class CrossCount {
 public:
  CrossCount(std::int64_t n_meioses, std::int64_t n_crossovers)
      : n_meioses_(n_meioses), n_crossovers_(n_crossovers) {
    if (n_meioses < 0 || n_crossovers < 0 || n_crossovers > n_meioses) {
      throw std::invalid_argument(
          "CrossCount: need 0 <= n_crossovers <= n_meioses");
    }
  }

  std::int64_t n_meioses() const { return n_meioses_; }
  std::int64_t n_crossovers() const { return n_crossovers_; }

 private:
  std::int64_t n_meioses_;
  std::int64_t n_crossovers_;
};

/// Recombination probability per meiosis. Free recombination between
/// unlinked loci caps it at 1/2, so the parameter space is [0, 1/2].
class RecombinationRate {
 public:
  explicit RecombinationRate(double rho) : rho_(rho) {
    if (!(rho >= 0.0 && rho <= 0.5)) {
      throw std::invalid_argument("RecombinationRate: rho must be in [0, 1/2]");
    }
  }

  double value() const { return rho_; }

 private:
  double rho_;
};

/// Position separation of two loci as a proportion x in [0,1] of a
/// chromosome of length L Morgan (default L = 1, about one crossover per
/// meiosis per chromosome).
class GeneticDistance {
 public:
  explicit GeneticDistance(double x, double chromosome_length = 1.0)
      : x_(x), length_(chromosome_length) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::invalid_argument("GeneticDistance: x must be in [0, 1]");
    }
    if (!(chromosome_length > 0.0)) {
      throw std::invalid_argument("GeneticDistance: chromosome length must be > 0");
    }
  }

  double x() const { return x_; }
  double chromosome_length() const { return length_; }

 private:
  double x_;
  double length_;
};

}  // namespace primula
