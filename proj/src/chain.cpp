#include "markov/chain.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "markov/error.hpp"
#include "markov/samplers.hpp"

namespace markov {

DistributionVector DistributionVector::from_probs(std::vector<double> probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw Error("NegativeEntry", "probability vector has a negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw Error("ProbabilitySumInvalid", "entries sum to " + std::to_string(sum));
  for (double& p : probs) p /= sum;
  return DistributionVector(std::move(probs));
}

DistributionVector DistributionVector::point_mass(std::size_t n, std::size_t state) {
  if (state >= n) throw Error("StateOutOfRange", "point mass outside state space");
  std::vector<double> probs(n, 0.0);
  probs[state] = 1.0;
  return DistributionVector(std::move(probs));
}

DistributionVector DistributionVector::uniform(std::size_t n) {
  return DistributionVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

TransitionMatrix TransitionMatrix::from_rows(Matrix rows) {
  if (rows.rows() != rows.cols())
    throw Error("NotSquare", "transition matrix must be square");
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      if (rows(i, j) < 0.0)
        throw Error("NegativeEntry", "negative entry in row " + std::to_string(i));
      sum += rows(i, j);
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw Error("RowSumInvalid",
                  "row " + std::to_string(i) + " sums to " + std::to_string(sum));
    for (std::size_t j = 0; j < rows.cols(); ++j) rows(i, j) /= sum;
  }
  return TransitionMatrix(std::move(rows));
}

TransitionMatrix srw_from_graph(const Graph& g) {
  if (g.has_loops())
    throw Error("LoopUnsupported", "simple random walk is defined on loopless graphs");
  const std::size_t n = g.num_vertices();
  Matrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0)
      throw Error("IsolatedVertex", "vertex " + std::to_string(v) + " has no neighbors");
    const double step = 1.0 / static_cast<double>(g.degree(v));
    for (std::size_t w : g.neighbors(v)) m(v, w) = step;
  }
  return TransitionMatrix::from_rows(std::move(m));
}

TransitionMatrix lazy(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = 0.5 * p(i, j) + (i == j ? 0.5 : 0.0);
  return TransitionMatrix::from_rows(std::move(m));
}

TransitionMatrix absorb(const TransitionMatrix& p, const std::vector<std::size_t>& boundary) {
  const std::size_t n = p.size();
  if (boundary.empty()) throw Error("EmptyBoundary", "boundary set is empty");
  std::vector<char> is_boundary(n, 0);
  for (std::size_t b : boundary) {
    if (b >= n) throw Error("StateOutOfRange", "boundary state " + std::to_string(b));
    is_boundary[b] = 1;
  }
  std::size_t count = 0;
  for (char f : is_boundary) count += f;
  if (count == n) throw Error("BoundaryIsEverything", "no interior states remain");

  Matrix m = p.matrix();
  for (std::size_t b = 0; b < n; ++b)
    if (is_boundary[b]) {
      for (std::size_t j = 0; j < n; ++j) m(b, j) = (b == j) ? 1.0 : 0.0;
    }
  return TransitionMatrix::from_rows(std::move(m));
}

TransitionMatrix birth_death(const std::vector<double>& up, const std::vector<double>& down,
                             const std::vector<double>& stay) {
  const std::size_t n = up.size();
  if (down.size() != n || stay.size() != n)
    throw Error("DimensionMismatch", "up/down/stay must have equal length");
  if (n == 0) throw Error("SizeTooSmall", "empty birth-death chain");
  if (down.front() != 0.0 || up.back() != 0.0)
    throw Error("BoundaryLeak", "need down[0] = 0 and up[n] = 0");
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (up[k] < 0 || down[k] < 0 || stay[k] < 0)
      throw Error("NegativeEntry", "negative rate at state " + std::to_string(k));
    if (std::abs(up[k] + down[k] + stay[k] - 1.0) > 1e-10)
      throw Error("ProbabilitySumInvalid",
                  "rates at state " + std::to_string(k) + " do not sum to one");
    if (k + 1 < n) m(k, k + 1) = up[k];
    if (k > 0) m(k, k - 1) = down[k];
    m(k, k) = stay[k];
  }
  return TransitionMatrix::from_rows(std::move(m));
}

TransitionMatrix ehrenfest_chain(std::size_t n_balls) {
  const std::size_t n = n_balls + 1;
  std::vector<double> up(n), down(n), stay(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    up[k] = static_cast<double>(n_balls - k) / static_cast<double>(n_balls);
    down[k] = static_cast<double>(k) / static_cast<double>(n_balls);
  }
  return birth_death(up, down, stay);
}

TransitionMatrix queue_chain(std::size_t capacity, double p) {
  const std::size_t n = capacity + 1;
  const double q = 1.0 - p;
  std::vector<double> up(n, p), down(n, q), stay(n, 0.0);
  up.back() = 0.0;
  down.front() = 0.0;
  stay.front() = q;
  stay.back() = p;
  return birth_death(up, down, stay);
}

TransitionMatrix bernoulli_laplace_chain(std::size_t n) {
  // Two urns of n balls each, n red and n blue in total; one step swaps a
  // uniform pick from each urn. State = red balls in the first urn.
  const std::size_t states = n + 1;
  std::vector<double> up(states), down(states), stay(states);
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    up[k] = ((nn - kk) / nn) * ((nn - kk) / nn);
    down[k] = (kk / nn) * (kk / nn);
    stay[k] = 1.0 - up[k] - down[k];
  }
  return birth_death(up, down, stay);
}

DistributionVector evolve(const DistributionVector& mu, const TransitionMatrix& p,
                          std::size_t steps) {
  if (mu.size() != p.size())
    throw Error("DimensionMismatch", "distribution and matrix sizes differ");
  std::vector<double> v = mu.probs();
  for (std::size_t k = 0; k < steps; ++k) v = linalg::row_times_matrix(v, p.matrix());
  return DistributionVector::from_probs(std::move(v));
}

Matrix matrix_power(const TransitionMatrix& p, std::size_t k) {
  if (k <= 8) {
    Matrix out = Matrix::identity(p.size());
    for (std::size_t i = 0; i < k; ++i) out = linalg::multiply(out, p.matrix());
    return out;
  }
  Matrix result = Matrix::identity(p.size());
  Matrix base = p.matrix();
  while (k > 0) {
    if (k & 1) result = linalg::multiply(result, base);
    k >>= 1;
    if (k > 0) base = linalg::multiply(base, base);
  }
  return result;
}

namespace {

std::vector<int> bfs_levels(const Matrix& m, bool transpose) {
  const std::size_t n = m.rows();
  std::vector<int> level(n, -1);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  level[0] = 0;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < n; ++v) {
      const double entry = transpose ? m(v, u) : m(u, v);
      if (entry > 0.0 && level[v] < 0) {
        level[v] = level[u] + 1;
        frontier.push(v);
      }
    }
  }
  return level;
}

}  // namespace

bool is_irreducible(const TransitionMatrix& p) {
  const auto forward = bfs_levels(p.matrix(), false);
  for (int l : forward)
    if (l < 0) return false;
  const auto backward = bfs_levels(p.matrix(), true);
  for (int l : backward)
    if (l < 0) return false;
  return true;
}

std::size_t period(const TransitionMatrix& p) {
  if (!is_irreducible(p)) throw Error("NotIrreducible", "period requires an irreducible chain");
  const auto level = bfs_levels(p.matrix(), false);
  const std::size_t n = p.size();
  long long g = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (p(u, v) > 0.0) {
        const long long diff = static_cast<long long>(level[u]) + 1 - level[v];
        g = std::gcd(g, diff < 0 ? -diff : diff);
      }
  return static_cast<std::size_t>(g);
}

Trajectory simulate(const TransitionMatrix& p, std::size_t start, std::size_t steps,
                    RandomSource& rng) {
  const std::size_t n = p.size();
  if (start >= n) throw Error("StateOutOfRange", "start state " + std::to_string(start));
  Trajectory t;
  t.seed = rng.seed();
  t.states.reserve(steps + 1);
  t.states.push_back(start);
  std::size_t x = start;
  for (std::size_t k = 0; k < steps; ++k) {
    x = sample_row(p, x, rng);
    t.states.push_back(x);
  }
  return t;
}

}  // namespace markov
