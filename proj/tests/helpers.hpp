#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "markov/chain.hpp"
#include "markov/graph.hpp"
#include "markov/optimize.hpp"
#include "markov/random.hpp"

namespace testutil {

// The five-vertex graph used throughout the early worked examples
// (degrees 1, 3, 3, 3, 2).
inline markov::Graph five_vertex_graph() {
  return markov::Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

// Six-cycle with a disjoint extra edge; connected = false, irreducible = false.
inline markov::Graph hexagon_plus_edge() {
  return markov::Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 7}});
}

// Square with one diagonal; boundary {2,3} gives the 2x2 fundamental-matrix
// example worked out in closed form.
inline markov::Graph diagonal_square_graph() {
  return markov::Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

// Center (state 0) jumps to a uniform leaf; a leaf returns to the center
// with probability p and stays put otherwise.
inline markov::TransitionMatrix star_chain(std::size_t leaves, double p) {
  markov::Matrix m(leaves + 1, leaves + 1);
  for (std::size_t l = 1; l <= leaves; ++l) {
    m(0, l) = 1.0 / static_cast<double>(leaves);
    m(l, 0) = p;
    m(l, l) = 1.0 - p;
  }
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// n-cycle walk moving clockwise (index +1) with probability p.
inline markov::TransitionMatrix biased_cycle(std::size_t n, double p) {
  markov::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = p;
    m(i, (i + n - 1) % n) = 1.0 - p;
  }
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// [[1-p, p], [q, 1-q]].
inline markov::TransitionMatrix two_state(double p, double q) {
  markov::Matrix m(2, 2);
  m(0, 0) = 1.0 - p;
  m(0, 1) = p;
  m(1, 0) = q;
  m(1, 1) = 1.0 - q;
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// Every entry 1/n: the walk on the complete graph with loops.
inline markov::TransitionMatrix complete_with_loops(std::size_t n) {
  markov::Matrix m(n, n, 1.0 / static_cast<double>(n));
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// Shift register on {0,1}^bits: drop the last coordinate, shift right, and
// prepend a fresh uniform bit.
inline markov::TransitionMatrix shift_register_chain(std::size_t bits) {
  const std::size_t n = std::size_t{1} << bits;
  markov::Matrix m(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t shifted = w >> 1;
    m(w, shifted) += 0.5;
    m(w, shifted | (n >> 1)) += 0.5;
  }
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// Path {0..n} absorbed at both ends with up-step probability p inside.
inline markov::TransitionMatrix absorbed_path(std::size_t n, double p = 0.5) {
  markov::Matrix m(n + 1, n + 1);
  m(0, 0) = 1.0;
  m(n, n) = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    m(j, j + 1) = p;
    m(j, j - 1) = 1.0 - p;
  }
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// Reflecting path {0..n}: forced bounce at the ends.
inline markov::TransitionMatrix reflecting_path(std::size_t n) {
  markov::Matrix m(n + 1, n + 1);
  m(0, 1) = 1.0;
  m(n, n - 1) = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    m(j, j + 1) = 0.5;
    m(j, j - 1) = 0.5;
  }
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// Random row-stochastic matrix with full support, hence irreducible and
// aperiodic.
inline markov::TransitionMatrix random_dense_chain(std::size_t n, markov::RandomSource& rng) {
  markov::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = 0.05 + rng.next_unit();
      sum += m(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
  }
  return markov::TransitionMatrix::from_rows(std::move(m));
}

// Random positive probability vector.
inline markov::DistributionVector random_distribution(std::size_t n,
                                                      markov::RandomSource& rng) {
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& x : v) {
    x = 0.05 + rng.next_unit();
    sum += x;
  }
  for (double& x : v) x /= sum;
  return markov::DistributionVector::from_probs(std::move(v));
}

// Random connected graph: a random tree plus extra random edges.
inline markov::Graph random_connected_graph(std::size_t n, markov::RandomSource& rng) {
  std::vector<markov::Edge> edges;
  for (std::size_t v = 1; v < n; ++v)
    edges.emplace_back(rng.next_below(v), v);
  const std::size_t extra = n / 2;
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t u = rng.next_below(n);
    const std::size_t v = rng.next_below(n);
    if (u != v) edges.emplace_back(u, v);
  }
  return markov::Graph(n, std::move(edges));
}

// The eight-vertex optimization example: a global minimum at vertex 6
// guarded by a local minimum at vertex 3.
inline markov::ObjectiveOnGraph ridge_objective() {
  markov::Graph g(8, {{0, 1},
                      {0, 3},
                      {1, 2},
                      {1, 3},
                      {2, 3},
                      {3, 4},
                      {3, 5},
                      {4, 5},
                      {4, 7},
                      {5, 6}});
  return markov::ObjectiveOnGraph{std::move(g), {101, 25, 4, 2, 10, 33, 1, 30}};
}

// Exact Bin(n, p) pmf by the multiplicative recurrence.
inline std::vector<double> binomial_pmf(std::size_t n, double p) {
  std::vector<double> pmf(n + 1);
  pmf[0] = std::pow(1.0 - p, static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    pmf[k + 1] = pmf[k] * static_cast<double>(n - k) / static_cast<double>(k + 1) * p /
                 (1.0 - p);
  return pmf;
}

// Lower regularized incomplete gamma P(a, x), series/continued-fraction
// split; used for chi-square p-values in distribution tests.
inline double regularized_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double log_gamma_a = std::lgamma(a);
  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma_a);
  }
  // Lentz continued fraction for Q(a, x).
  double b = x + 1.0 - a;
  double c = 1e300;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  const double q = std::exp(-x + a * std::log(x) - log_gamma_a) * h;
  return 1.0 - q;
}

inline double chi_square_p_value(double statistic, double dof) {
  return 1.0 - regularized_gamma_p(dof / 2.0, statistic / 2.0);
}

}  // namespace testutil
