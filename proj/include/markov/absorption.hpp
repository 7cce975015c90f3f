#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "markov/chain.hpp"
#include "markov/linalg.hpp"

namespace markov {

// Hitting-time linear algebra for a chain watched until it enters the
// boundary set. fundamental(i,j) is the expected number of visits to
// interior state j before absorption when starting from interior state i;
// its row sums are the expected hitting times, and fundamental * R gives
// the absorption probabilities.
struct AbsorptionAnalysis {
  std::vector<std::size_t> interior;  // ascending
  std::vector<std::size_t> boundary;  // ascending
  Matrix fundamental;                 // (I - Q)^{-1}
  std::vector<double> hit_times;      // indexed like interior
  Matrix hit_probs;                   // interior x boundary
};

AbsorptionAnalysis analyze(const TransitionMatrix& p, const std::vector<std::size_t>& boundary);

// E_x(tau_x^+) = 1 + sum_{y != x} E_y(tau_x) P(x,y). Requires irreducibility.
double expected_return_time(const TransitionMatrix& p, std::size_t state);

// The unique h with (Ph)(x) = h(x) on the interior and h = f on the
// boundary; boundary_values must be keyed by exactly the complement of
// `interior`.
std::vector<double> harmonic_extend(const TransitionMatrix& p,
                                    const std::vector<std::size_t>& interior,
                                    const std::map<std::size_t, double>& boundary_values);

struct RuinResult {
  double hit_prob_right = 0.0;
  double expected_time = 0.0;
};

// Walk on {0..n} absorbed at both ends, up-step probability p. For p = 1/2
// the closed forms k/n and k(n-k) are returned; otherwise the hitting
// probability uses ((q/p)^k - 1)/((q/p)^n - 1) and the time comes from the
// fundamental matrix of the explicit chain.
RuinResult gamblers_ruin(std::size_t n, std::size_t start, double up_prob);

}  // namespace markov
