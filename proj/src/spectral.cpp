#include "markov/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "markov/error.hpp"
#include "markov/stationary.hpp"

namespace markov {

Matrix symmetrize(const TransitionMatrix& p, const DistributionVector& pi) {
  const std::size_t n = p.size();
  if (pi.size() != n) throw Error("DimensionMismatch", "pi and P sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    if (pi[i] <= 0.0) throw Error("NonPositivePi", "pi vanishes at state " + std::to_string(i));
  const ReversibilityReport report = check_reversible(p, pi, 1e-9);
  if (!report.reversible)
    throw Error("NotReversible", "detail balance violated by " +
                                     std::to_string(report.max_violation) + " at pair (" +
                                     std::to_string(report.worst_x) + "," +
                                     std::to_string(report.worst_y) + ")");
  Matrix a(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a(x, y) = std::sqrt(pi[x] / pi[y]) * p(x, y);
  return a;
}

namespace {

Matrix symmetrized_average(const TransitionMatrix& p, const DistributionVector& pi) {
  Matrix a = symmetrize(p, pi);
  // Rounding leaves asymmetry of a few ulps; average it away before Jacobi.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = avg;
      a(j, i) = avg;
    }
  return a;
}

SpectralData derive(std::vector<double> eigenvalues) {
  SpectralData data;
  data.eigenvalues = std::move(eigenvalues);
  data.lambda_star = 0.0;
  for (std::size_t j = 1; j < data.eigenvalues.size(); ++j)
    data.lambda_star = std::max(data.lambda_star, std::abs(data.eigenvalues[j]));
  data.gap = 1.0 - data.lambda_star;
  data.t_rel = 1.0 / data.gap;
  return data;
}

}  // namespace

SpectralData spectrum(const TransitionMatrix& p, const DistributionVector& pi) {
  return derive(linalg::jacobi_eigenvalues(symmetrized_average(p, pi)));
}

EigenSystem spectrum_with_vectors(const TransitionMatrix& p, const DistributionVector& pi) {
  Matrix u;
  EigenSystem sys;
  sys.eigenvalues = linalg::jacobi_eigenvalues(symmetrized_average(p, pi), &u);
  const std::size_t n = p.size();
  sys.right_eigenvectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      sys.right_eigenvectors(i, j) = u(i, j) / std::sqrt(pi[i]);
  return sys;
}

MixingBounds mixing_bounds(const SpectralData& spec, double pi_min, double eps) {
  if (eps <= 0.0 || eps >= 1.0) throw Error("InvalidProbability", "eps must lie in (0,1)");
  if (pi_min <= 0.0) throw Error("NonPositivePi", "pi_min must be positive");
  if (spec.gap <= 0.0) throw Error("DegenerateGap", "absolute spectral gap is not positive");
  MixingBounds bounds;
  bounds.lower = (spec.t_rel - 1.0) * std::log(1.0 / (2.0 * eps));
  bounds.upper = std::log(1.0 / (eps * pi_min)) * spec.t_rel;
  return bounds;
}

std::vector<double> cycle_spectrum(std::size_t n) {
  if (n < 3) throw Error("SizeTooSmall", "cycle needs at least 3 vertices");
  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j)
    values[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(n));
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> lazy_hypercube_spectrum(std::size_t dim) {
  if (dim < 1) throw Error("SizeTooSmall", "hypercube needs dimension >= 1");
  if (dim > 24)
    throw Error("StateSpaceTooLarge", "2^" + std::to_string(dim) + " eigenvalues requested");
  std::vector<double> values;
  values.reserve(std::size_t{1} << dim);
  double binom = 1.0;  // C(dim, k), updated multiplicatively
  for (std::size_t k = 0; k <= dim; ++k) {
    const double lambda = 1.0 - static_cast<double>(k) / static_cast<double>(dim);
    for (std::size_t c = 0; c < static_cast<std::size_t>(std::llround(binom)); ++c)
      values.push_back(lambda);
    binom = binom * static_cast<double>(dim - k) / static_cast<double>(k + 1);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace markov
