#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "markov/chain.hpp"
#include "markov/random.hpp"

namespace markov {

// Stick-breaking over pi: returns the k with sum_{i<k} pi_i < U <= sum_{i<=k},
// one unit draw. States with zero mass are never returned.
std::size_t sample_discrete(const DistributionVector& pi, RandomSource& rng);

// Same, over row x of a transition matrix (avoids building a
// DistributionVector per step).
std::size_t sample_row(const TransitionMatrix& p, std::size_t x, RandomSource& rng);

// X = F^{-1}(U); the caller owns monotonicity of inverse_cdf on (0,1).
double inverse_cdf_sample(const std::function<double(double)>& inverse_cdf, RandomSource& rng);

struct RejectionResult {
  double value = 0.0;
  std::size_t proposals_used = 0;
};

// Propose from base_sampler, accept when U <= target(y) / (bound * base(y)).
// Throws RatioExceedsOne if the bound assumption is violated at a proposal,
// MaxProposalsExceeded after max_proposals rejections.
RejectionResult rejection_sample(const std::function<double(double)>& target_pdf,
                                 const std::function<double(double)>& base_pdf,
                                 const std::function<double(RandomSource&)>& base_sampler,
                                 double bound, RandomSource& rng,
                                 std::size_t max_proposals = 1000000);

// Base chain plus the two ratios entering the acceptance probability
// min(1, target_ratio(x,y) * base_ratio(x,y)). target_ratio(x,y) = pi(y)/pi(x)
// needs no normalizing constant; base_ratio(x,y) = q(y,x)/q(x,y).
struct MetropolisSpec {
  std::function<std::size_t(std::size_t, RandomSource&)> base_sample;
  std::function<double(std::size_t, std::size_t)> base_ratio;
  std::function<double(std::size_t, std::size_t)> target_ratio;
};

// One proposal plus exactly one acceptance draw (U <= a accepts); a rejected
// proposal returns x.
std::size_t metropolis_step(const MetropolisSpec& spec, std::size_t x, RandomSource& rng);

// The explicit Metropolis chain for base q and target pi:
// p(x,y) = q(x,y) min(1, pi(y)q(y,x) / (pi(x)q(x,y))) off the diagonal, with
// the rejected mass folded into p(x,x).
TransitionMatrix metropolis_matrix(const TransitionMatrix& base, const DistributionVector& pi);

// Draws positions I, J independently uniform (two draws); swaps them unless
// I = J.
std::vector<std::size_t> random_transposition_step(std::vector<std::size_t> perm,
                                                   RandomSource& rng);

enum class Scan { random, systematic };

// Sampler for one coordinate given the full current state.
using CoordinateSampler = std::function<int(const std::vector<int>&, RandomSource&)>;

// Random scan updates one uniformly chosen coordinate (one draw for the
// choice plus the conditional's draws); systematic scan updates every
// coordinate left to right.
std::vector<int> gibbs_sweep(const std::vector<CoordinateSampler>& conditionals,
                             std::vector<int> state, Scan scan, RandomSource& rng);

// Runs burn_in + steps kernel applications from start and records every
// thinning-th post-burn-in state.
std::vector<std::size_t> run_chain(
    const std::function<std::size_t(std::size_t, RandomSource&)>& kernel, std::size_t start,
    std::size_t steps, std::size_t burn_in, std::size_t thinning, RandomSource& rng);

}  // namespace markov
