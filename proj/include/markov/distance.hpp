#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "markov/chain.hpp"

namespace markov {

// (1/2) sum |p_k - q_k|. Also evaluated through the one-sided identity
// sum_{p_k >= q_k} (p_k - q_k); the two must agree within 1e-12.
double tv_distance(const DistributionVector& p, const DistributionVector& q);

// Entry n is ||delta_start P^n - pi||_TV for n = 0..n_max, by iterated
// vector-matrix products.
std::vector<double> convergence_curve(const TransitionMatrix& p, std::size_t start,
                                      const DistributionVector& pi, std::size_t n_max);

// Least n with max over starting states of ||delta_x P^n - pi||_TV <= eps;
// nullopt when the cap is reached first (periodic chains legitimately never
// mix, so this is a value rather than an error). eps = 0 is allowed for
// chains that reach stationarity exactly.
std::optional<std::size_t> empirical_mixing_time(const TransitionMatrix& p,
                                                 const DistributionVector& pi, double eps,
                                                 std::size_t n_cap);

// 1 - (1 - |a-b|)^n, the shared-uniform coupling bound on the TV distance
// between Bin(n, a) and Bin(n, b).
double binomial_coupling_bound(std::size_t n, double a, double b);

}  // namespace markov
