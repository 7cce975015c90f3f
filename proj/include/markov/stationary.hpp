#pragma once

#include <cstddef>
#include <vector>

#include "markov/chain.hpp"
#include "markov/graph.hpp"

namespace markov {

struct ReversibilityReport {
  bool reversible = false;
  double max_violation = 0.0;  // largest |pi(x)P(x,y) - pi(y)P(y,x)|
  std::size_t worst_x = 0;
  std::size_t worst_y = 0;
};

// The unique pi with pi P = pi, sum pi = 1, by Gaussian elimination on
// (P^T - I) with the last equation replaced by the normalization constraint.
// Requires irreducibility (which also guarantees strictly positive entries).
DistributionVector solve_stationary(const TransitionMatrix& p);

// Escape hatch for reducible chains: returns the stationary distribution
// supported on the lowest-indexed closed communicating class. Which solution
// this is, is implementation-defined; there are infinitely many for
// reducible chains.
DistributionVector solve_stationary_any(const TransitionMatrix& p);

// pi_v = deg(v) / 2|E| for the simple random walk on a connected graph.
DistributionVector srw_stationary(const Graph& g);

// Detail balance check over all ordered pairs.
ReversibilityReport check_reversible(const TransitionMatrix& p, const DistributionVector& pi,
                                     double tol = 1e-9);

// Time reversal P_hat(y,x) = P(x,y) pi(x)/pi(y); pi must be strictly
// positive and stationary for p within 1e-9.
TransitionMatrix reverse(const TransitionMatrix& p, const DistributionVector& pi);

// pi_k proportional to w_k = (up_0 ... up_{k-1}) / (down_1 ... down_k),
// computed in log space. Requires up_k > 0 for k < n and down_k > 0 for
// k >= 1.
DistributionVector birth_death_stationary(const std::vector<double>& up,
                                          const std::vector<double>& down);

}  // namespace markov
