#pragma once

#include <stdexcept>
#include <string>

namespace primula {

/// Marginal likelihoods and Bayes factors are undefined (up to an arbitrary
/// constant) under a prior with infinite total mass.
class ImproperPriorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed-form path was requested for a prior family it does not cover.
class UnsupportedPriorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hypothesis test needs positive prior mass on both hypotheses.
class DegenerateHypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An estimator was asked for without any observations.
class NoDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sample fell outside the stated histogram range. The supports here are
/// known in advance, so this always indicates a bug upstream.
class OutOfRangeSampleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace primula
