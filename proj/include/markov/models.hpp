#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "markov/chain.hpp"
#include "markov/graph.hpp"
#include "markov/random.hpp"

namespace markov {

// Polya urn state; time-inhomogeneous, so it never becomes a
// TransitionMatrix.
struct PolyaState {
  std::size_t black = 1;
  std::size_t red = 1;
  std::size_t step = 0;
};

// Draw a ball, return it with another of the same color: black grows with
// probability black/(black+red). One unit draw.
PolyaState polya_step(PolyaState s, RandomSource& rng);

// Exact pmf of the black-ball count after `steps` turns, indexed by count
// k = 0..a+steps, via the forward recursion
// P_{n+1}(k) = P_n(k) (1 - k/(n+a+b)) + P_n(k-1) (k-1)/(n+a+b).
DistributionVector polya_pmf_exact(std::size_t a, std::size_t b, std::size_t steps);

// P(X_n = k) for the simple symmetric walk on the integers started at 0:
// C(n, (n+k)/2) / 2^n when n+k is even and |k| <= n, else 0.
double srw_z_pmf(std::size_t steps, long long position);

enum class SpinDirection { counterclockwise, clockwise };

// Bitmasks with exactly `particles` ones on `ring` sites, in increasing
// numeric order; the state indexing used by exclusion_chain.
std::vector<std::uint32_t> exclusion_states(std::size_t ring, std::size_t particles);

// Asymmetric exclusion process: pick one of the k particles uniformly and
// move it one step in `dir` when that site is free, else stay.
TransitionMatrix exclusion_chain(std::size_t ring, std::size_t particles,
                                 SpinDirection dir = SpinDirection::counterclockwise);

// Number of triangles by triple enumeration.
std::size_t triangle_count(const Graph& g);

// exp(beta (count(G') - count(G))) for G' = G with `edge` toggled: the
// Metropolis target ratio for the triangle random-graph model; no
// normalizing constant needed.
double triangle_gibbs_ratio(const Graph& g, std::pair<std::size_t, std::size_t> edge,
                            double beta);

// Monte-Carlo mean of the first time the simple walk has visited every
// vertex, with one derived stream per trial.
double cover_time_mean(const Graph& g, std::size_t start, std::size_t trials,
                       RandomSource& rng);

}  // namespace markov
