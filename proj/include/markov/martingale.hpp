#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "markov/chain.hpp"
#include "markov/random.hpp"

namespace markov {

// Y_n = lambda^{-n} v(X_n) evaluated at (n, x). The power is taken in log
// space so small |lambda| with large n does not overflow prematurely.
double eigen_martingale_value(double lambda, const std::vector<double>& eigenvector,
                              std::size_t step, std::size_t state);

using SpaceTimeFunction = std::function<double(std::size_t step, std::size_t state)>;

struct HarmonicCheck {
  bool holds = true;
  double worst_violation = 0.0;
  std::size_t worst_step = 0;
  std::size_t worst_state = 0;
};

// Exact one-step averaging certificate: verifies
// sum_y P(x,y) f(n+1, y) = f(n, x) within tol for n < steps, over `states`
// (all states when empty). This is the non-Monte-Carlo martingale check.
HarmonicCheck check_space_time_harmonic(const TransitionMatrix& p, const SpaceTimeFunction& f,
                                        std::size_t steps, double tol,
                                        const std::vector<std::size_t>& states = {});

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Monte-Carlo estimate of E(f(tau, X_tau)) for tau the hitting time of
// `boundary`, one derived stream per trial. With f space-time harmonic on
// the interior this estimates E(Y_0) by optional sampling.
MonteCarloEstimate optional_sampling_estimate(const TransitionMatrix& p,
                                              const SpaceTimeFunction& f,
                                              const std::vector<std::size_t>& boundary,
                                              std::size_t start, std::size_t trials,
                                              RandomSource& rng);

}  // namespace markov
