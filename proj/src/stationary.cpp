#include "markov/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markov/error.hpp"
#include "markov/linalg.hpp"

namespace markov {

namespace {

// Solve pi P = pi, sum pi = 1 on the full index set, assuming the restricted
// chain is irreducible.
std::vector<double> stationary_system(const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = p(j, i) - (i == j ? 1.0 : 0.0);
  for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = 1.0;
  std::vector<double> rhs(n, 0.0);
  rhs[n - 1] = 1.0;
  std::vector<double> pi = linalg::solve(std::move(a), std::move(rhs));
  double sum = 0.0;
  for (double x : pi) sum += x;
  for (double& x : pi) x /= sum;
  return pi;
}

}  // namespace

DistributionVector solve_stationary(const TransitionMatrix& p) {
  if (!is_irreducible(p))
    throw Error("NotIrreducible",
                "stationary distribution is not unique; see solve_stationary_any");
  return DistributionVector::from_probs(stationary_system(p.matrix()));
}

DistributionVector solve_stationary_any(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  // Reachability closure; n is small, so the quadratic BFS per state is fine.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (p(u, v) > 0.0 && !reach[s][v]) {
          reach[s][v] = 1;
          stack.push_back(v);
        }
    }
  }
  // The communicating class of s is closed iff everything reachable from s
  // reaches back. Pick the lowest-indexed state in a closed class.
  for (std::size_t s = 0; s < n; ++s) {
    bool closed = true;
    for (std::size_t v = 0; v < n && closed; ++v)
      if (reach[s][v] && !reach[v][s]) closed = false;
    if (!closed) continue;

    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (reach[s][v]) members.push_back(v);
    Matrix sub(members.size(), members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        sub(i, j) = p(members[i], members[j]);
    const std::vector<double> sub_pi = stationary_system(sub);
    std::vector<double> pi(n, 0.0);
    for (std::size_t i = 0; i < members.size(); ++i) pi[members[i]] = sub_pi[i];
    return DistributionVector::from_probs(std::move(pi));
  }
  throw Error("SingularSystem", "no closed communicating class found");
}

DistributionVector srw_stationary(const Graph& g) {
  if (!is_connected(g)) throw Error("Disconnected", "graph is not connected");
  const double total = 2.0 * static_cast<double>(g.num_edges());
  std::vector<double> pi(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) throw Error("IsolatedVertex", "vertex " + std::to_string(v));
    pi[v] = static_cast<double>(g.degree(v)) / total;
  }
  return DistributionVector::from_probs(std::move(pi));
}

ReversibilityReport check_reversible(const TransitionMatrix& p, const DistributionVector& pi,
                                     double tol) {
  if (pi.size() != p.size()) throw Error("DimensionMismatch", "pi and P sizes differ");
  ReversibilityReport report;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const double violation = std::abs(pi[x] * p(x, y) - pi[y] * p(y, x));
      if (violation > report.max_violation) {
        report.max_violation = violation;
        report.worst_x = x;
        report.worst_y = y;
      }
    }
  report.reversible = report.max_violation <= tol;
  return report;
}

TransitionMatrix reverse(const TransitionMatrix& p, const DistributionVector& pi) {
  const std::size_t n = p.size();
  if (pi.size() != n) throw Error("DimensionMismatch", "pi and P sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    if (pi[i] <= 0.0) throw Error("NonPositivePi", "pi vanishes at state " + std::to_string(i));
  const std::vector<double> pi_p = linalg::row_times_matrix(pi.probs(), p.matrix());
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(pi_p[i] - pi[i]) > 1e-9)
      throw Error("NotStationary", "pi P differs from pi at state " + std::to_string(i));
  Matrix m(n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) m(y, x) = p(x, y) * pi[x] / pi[y];
  return TransitionMatrix::from_rows(std::move(m));
}

DistributionVector birth_death_stationary(const std::vector<double>& up,
                                          const std::vector<double>& down) {
  const std::size_t n = up.size();
  if (down.size() != n) throw Error("DimensionMismatch", "up/down must have equal length");
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (up[k] <= 0.0)
      throw Error("NotIrreducible", "up rate vanishes at state " + std::to_string(k));
  for (std::size_t k = 1; k < n; ++k)
    if (down[k] <= 0.0)
      throw Error("NotIrreducible", "down rate vanishes at state " + std::to_string(k));

  // w_k ratios overflow for long chains with strong drift; accumulate logs.
  std::vector<double> log_w(n, 0.0);
  for (std::size_t k = 1; k < n; ++k)
    log_w[k] = log_w[k - 1] + std::log(up[k - 1]) - std::log(down[k]);
  const double peak = *std::max_element(log_w.begin(), log_w.end());
  std::vector<double> pi(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    pi[k] = std::exp(log_w[k] - peak);
    sum += pi[k];
  }
  for (double& x : pi) x /= sum;
  return DistributionVector::from_probs(std::move(pi));
}

}  // namespace markov
