#include "markov/distance.hpp"

#include <cmath>
#include <string>

#include "markov/error.hpp"
#include "markov/linalg.hpp"

namespace markov {

namespace {

double tv_raw(const std::vector<double>& p, const std::vector<double>& q) {
  double sum_abs = 0.0;
  double sum_excess = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double diff = p[k] - q[k];
    sum_abs += std::abs(diff);
    if (diff > 0.0) sum_excess += diff;
  }
  const double half_abs = 0.5 * sum_abs;
  if (std::abs(half_abs - sum_excess) > 1e-12)
    throw Error("TvIdentityViolated", "the two total-variation formulas disagree by " +
                                          std::to_string(std::abs(half_abs - sum_excess)));
  return half_abs;
}

}  // namespace

double tv_distance(const DistributionVector& p, const DistributionVector& q) {
  if (p.size() != q.size()) throw Error("DimensionMismatch", "distribution lengths differ");
  return tv_raw(p.probs(), q.probs());
}

std::vector<double> convergence_curve(const TransitionMatrix& p, std::size_t start,
                                      const DistributionVector& pi, std::size_t n_max) {
  if (pi.size() != p.size()) throw Error("DimensionMismatch", "pi and P sizes differ");
  if (start >= p.size()) throw Error("StateOutOfRange", std::to_string(start));
  std::vector<double> mu(p.size(), 0.0);
  mu[start] = 1.0;
  std::vector<double> curve;
  curve.reserve(n_max + 1);
  curve.push_back(tv_raw(mu, pi.probs()));
  for (std::size_t n = 1; n <= n_max; ++n) {
    mu = linalg::row_times_matrix(mu, p.matrix());
    curve.push_back(tv_raw(mu, pi.probs()));
  }
  return curve;
}

std::optional<std::size_t> empirical_mixing_time(const TransitionMatrix& p,
                                                 const DistributionVector& pi, double eps,
                                                 std::size_t n_cap) {
  if (eps < 0.0 || eps >= 1.0)
    throw Error("InvalidProbability", "eps must lie in [0,1)");
  if (pi.size() != p.size()) throw Error("DimensionMismatch", "pi and P sizes differ");
  const std::size_t n = p.size();
  // The rows of P^n are exactly the n start-state distributions, so walk
  // the matrix powers.
  Matrix power = Matrix::identity(n);
  std::vector<double> row(n);
  for (std::size_t step = 0; step <= n_cap; ++step) {
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t j = 0; j < n; ++j) row[j] = power(x, j);
      worst = std::max(worst, tv_raw(row, pi.probs()));
    }
    if (worst <= eps) return step;
    if (step < n_cap) power = linalg::multiply(power, p.matrix());
  }
  return std::nullopt;
}

double binomial_coupling_bound(std::size_t n, double a, double b) {
  if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0)
    throw Error("InvalidProbability", "success probabilities must lie in [0,1]");
  return 1.0 - std::pow(1.0 - std::abs(a - b), static_cast<double>(n));
}

}  // namespace markov
