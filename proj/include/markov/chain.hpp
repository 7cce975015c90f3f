#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "markov/graph.hpp"
#include "markov/linalg.hpp"
#include "markov/random.hpp"

namespace markov {

// Probability vector over states. Validated on construction (entries >= 0,
// sum within 1e-10 of one) and then renormalized exactly so downstream
// identities hold to machine precision.
class DistributionVector {
 public:
  static DistributionVector from_probs(std::vector<double> probs);
  static DistributionVector point_mass(std::size_t n, std::size_t state);
  static DistributionVector uniform(std::size_t n);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const noexcept { return probs_; }

 private:
  explicit DistributionVector(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

// Dense row-stochastic matrix over an indexed finite state space.
// Rows are validated to sum to one within 1e-10 and then renormalized.
class TransitionMatrix {
 public:
  static TransitionMatrix from_rows(Matrix rows);

  std::size_t size() const noexcept { return entries_.rows(); }
  double operator()(std::size_t x, std::size_t y) const { return entries_(x, y); }
  const Matrix& matrix() const noexcept { return entries_; }

  std::vector<std::string> labels;  // optional; used by the CLI

 private:
  explicit TransitionMatrix(Matrix m) : entries_(std::move(m)) {}
  Matrix entries_;
};

struct Trajectory {
  std::vector<std::size_t> states;
  std::uint64_t seed = 0;
};

// P(x,y) = 1/deg(x) for y ~ x. Rejects graphs with loops or isolated
// vertices.
TransitionMatrix srw_from_graph(const Graph& g);

// (I + P) / 2.
TransitionMatrix lazy(const TransitionMatrix& p);

// Rows of boundary states replaced by identity rows; the chain stopped at
// the boundary hitting time.
TransitionMatrix absorb(const TransitionMatrix& p, const std::vector<std::size_t>& boundary);

// Tridiagonal chain on {0..n} from per-state up/down/stay probabilities.
TransitionMatrix birth_death(const std::vector<double>& up, const std::vector<double>& down,
                             const std::vector<double>& stay);

// Presets built on birth_death.
TransitionMatrix ehrenfest_chain(std::size_t n_balls);
TransitionMatrix queue_chain(std::size_t capacity, double p);
TransitionMatrix bernoulli_laplace_chain(std::size_t n);

// mu P^k by repeated vector-matrix products.
DistributionVector evolve(const DistributionVector& mu, const TransitionMatrix& p,
                          std::size_t steps);

// P^k; repeated squaring for k > 8, plain products otherwise.
Matrix matrix_power(const TransitionMatrix& p, std::size_t k);

bool is_irreducible(const TransitionMatrix& p);

// gcd of possible return times, computed as the gcd of level(u)+1-level(v)
// over the positive-probability edges, with levels from a BFS rooted at
// state 0. Requires irreducibility.
std::size_t period(const TransitionMatrix& p);

// Runs `steps` transitions from `start`; one unit draw per step
// (stick-breaking over the current row).
Trajectory simulate(const TransitionMatrix& p, std::size_t start, std::size_t steps,
                    RandomSource& rng);

}  // namespace markov
