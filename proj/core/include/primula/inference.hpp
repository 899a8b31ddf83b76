#pragma once

#include "primula/log_value.hpp"
#include "primula/priors.hpp"
#include "primula/types.hpp"

namespace primula {

enum class MarginalMethod { closed_form, quadrature, approximation };

struct MarginalResult {
  LogValue log_marginal;
  MarginalMethod method = MarginalMethod::closed_form;
  double error_estimate = 0.0;  // absolute, linear scale; 0 for closed forms
};

/// Outcome of the linked-vs-unlinked test. "Linked" is the continuous
/// component, "unlinked" the point mass at 1/2; the Bayes factor is
/// reported linked:unlinked.
struct TestResult {
  double log_bayes_factor = 0.0;
  double prior_odds = 0.0;
  double posterior_odds = 0.0;
  double posterior_prob_linked = 0.0;
};

/// Binomial log likelihood ln C(N,y) + y ln rho + (N-y) ln(1-rho), with the
/// 0 ln 0 = 0 convention. Zero (not -inf) only when the probability is
/// exactly zero, i.e. rho = 0 with y > 0.
LogValue log_likelihood(const CrossCount& data, RecombinationRate rho);

/// Linkage branch of the mixture marginal with the upper integration limit
/// extended from 1/2 to 1, which collapses to closed form:
///   continuous_weight * 2 * C(N,y) * B(y+1, N-y+1)
///     = continuous_weight * 2 / (N+1).
/// Specific to a flat continuous component (UnsupportedPriorError otherwise).
MarginalResult marginal_approx_haldane(const CrossCount& data,
                                       const MixturePrior& mixture);

/// Exact linkage branch of the mixture marginal over [0, 1/2]:
///   continuous_weight * 2 * C(N,y) * B(y+1, N-y+1) * I_{1/2}(y+1, N-y+1).
/// Flat continuous component only.
MarginalResult marginal_exact_haldane(const CrossCount& data,
                                      const MixturePrior& mixture);

/// Marginal likelihood integral p(y|N) = int p(y|rho,N) p(rho) drho over the
/// prior's support, by adaptive quadrature of the shifted log-space
/// integrand. Works for any proper prior; rejects improper ones.
MarginalResult log_marginal_continuous(const CrossCount& data,
                                       const ContinuousPrior& prior);

/// Bayes factor test of linkage:
///   log BF = ln int p(y|rho) p(rho) drho - ln p(y | rho = point mass).
/// The Bayes factor does not depend on the mixture weights; they only set
/// the prior odds. Degenerate weights (0 or 1) admit no test.
TestResult bayes_factor_test(const CrossCount& data, const MixturePrior& mixture);

/// Normalized posterior density p(rho|y) under a proper continuous prior;
/// zero outside the prior's support.
double posterior_density(const CrossCount& data, const ContinuousPrior& prior,
                         RecombinationRate rho);

/// Posterior density with the quadrature normalizer computed once, for
/// evaluation on grids.
class PosteriorDensity {
 public:
  PosteriorDensity(const CrossCount& data, ContinuousPrior prior);

  double operator()(RecombinationRate rho) const;
  const MarginalResult& normalizer() const { return normalizer_; }

 private:
  CrossCount data_;
  ContinuousPrior prior_;
  MarginalResult normalizer_;
};

/// Maximum likelihood estimate y/N, clamped to the parameter space [0, 1/2].
RecombinationRate mle(const CrossCount& data);

}  // namespace primula
