#include "markov/martingale.hpp"

#include <cmath>
#include <string>

#include "markov/absorption.hpp"
#include "markov/error.hpp"
#include "markov/samplers.hpp"

namespace markov {

double eigen_martingale_value(double lambda, const std::vector<double>& eigenvector,
                              std::size_t step, std::size_t state) {
  if (lambda == 0.0) throw Error("ZeroEigenvalue", "lambda^{-n} undefined for lambda = 0");
  if (state >= eigenvector.size()) throw Error("StateOutOfRange", std::to_string(state));
  const double magnitude = std::exp(-static_cast<double>(step) * std::log(std::abs(lambda)));
  const double sign = (lambda < 0.0 && step % 2 == 1) ? -1.0 : 1.0;
  return sign * magnitude * eigenvector[state];
}

HarmonicCheck check_space_time_harmonic(const TransitionMatrix& p, const SpaceTimeFunction& f,
                                        std::size_t steps, double tol,
                                        const std::vector<std::size_t>& states) {
  std::vector<std::size_t> targets = states;
  if (targets.empty())
    for (std::size_t x = 0; x < p.size(); ++x) targets.push_back(x);

  HarmonicCheck check;
  for (std::size_t n = 0; n < steps; ++n)
    for (std::size_t x : targets) {
      double averaged = 0.0;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p(x, y) > 0.0) averaged += p(x, y) * f(n + 1, y);
      const double violation = std::abs(averaged - f(n, x));
      if (violation > check.worst_violation) {
        check.worst_violation = violation;
        check.worst_step = n;
        check.worst_state = x;
      }
    }
  check.holds = check.worst_violation <= tol;
  return check;
}

MonteCarloEstimate optional_sampling_estimate(const TransitionMatrix& p,
                                              const SpaceTimeFunction& f,
                                              const std::vector<std::size_t>& boundary,
                                              std::size_t start, std::size_t trials,
                                              RandomSource& rng) {
  if (trials == 0) throw Error("SizeTooSmall", "need at least one trial");
  if (start >= p.size()) throw Error("StateOutOfRange", std::to_string(start));
  // Reuse the reachability validation; the analysis itself is not needed.
  analyze(p, boundary);

  std::vector<char> is_boundary(p.size(), 0);
  for (std::size_t b : boundary) is_boundary[b] = 1;

  constexpr std::size_t kStepCap = 100000000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    RandomSource trial = rng.spawn();
    std::size_t x = start;
    std::size_t n = 0;
    while (!is_boundary[x]) {
      x = sample_row(p, x, trial);
      if (++n > kStepCap)
        throw Error("BoundaryUnreachable", "trial exceeded the step cap before absorption");
    }
    const double y = f(n, x);
    sum += y;
    sum_sq += y * y;
  }
  MonteCarloEstimate est;
  const double nn = static_cast<double>(trials);
  est.mean = sum / nn;
  const double variance = std::max(0.0, sum_sq / nn - est.mean * est.mean);
  est.std_error = std::sqrt(variance / nn);
  return est;
}

}  // namespace markov
