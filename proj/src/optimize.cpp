#include "markov/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markov/error.hpp"

namespace markov {

AnnealSchedule log_schedule(double c) {
  return [c](std::size_t t) { return c * std::log1p(static_cast<double>(t)); };
}

DistributionVector gibbs_distribution(const ObjectiveOnGraph& obj, double lambda) {
  if (obj.values.size() != obj.graph.num_vertices())
    throw Error("DimensionMismatch", "objective must assign a value to every vertex");
  if (lambda < 0.0) throw Error("InvalidProbability", "lambda must be nonnegative");
  const double floor = *std::min_element(obj.values.begin(), obj.values.end());
  std::vector<double> weights(obj.values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = std::exp(-lambda * (obj.values[i] - floor));
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return DistributionVector::from_probs(std::move(weights));
}

std::size_t hill_climb_step(const ObjectiveOnGraph& obj, double lambda, std::size_t x,
                            RandomSource& rng) {
  const Graph& g = obj.graph;
  if (x >= g.num_vertices()) throw Error("StateOutOfRange", std::to_string(x));
  if (g.degree(x) == 0)
    throw Error("IsolatedVertex", "vertex " + std::to_string(x) + " has no neighbors");
  const auto& nbrs = g.neighbors(x);
  const std::size_t y = nbrs[rng.next_below(nbrs.size())];
  const double ratio = static_cast<double>(g.degree(x)) / static_cast<double>(g.degree(y));
  const double accept =
      std::min(1.0, ratio * std::exp(-lambda * (obj.values[y] - obj.values[x])));
  return (rng.next_unit() <= accept) ? y : x;
}

AnnealResult simulated_annealing(const ObjectiveOnGraph& obj, const AnnealSchedule& schedule,
                                 std::size_t steps, std::size_t start, RandomSource& rng) {
  if (steps < 1) throw Error("SizeTooSmall", "annealing needs at least one step");
  AnnealResult result;
  result.best_vertex = start;
  result.best_value = obj.values.at(start);
  result.trace.reserve(steps + 1);
  result.trace.push_back(start);
  std::size_t x = start;
  double previous_lambda = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    const double lambda = schedule(t);
    // the schedule must cool monotonically; check it at the sampled steps
    if (lambda < 0.0 || (t > 0 && lambda < previous_lambda))
      throw Error("InvalidSchedule", "lambda must be nonnegative and nondecreasing");
    previous_lambda = lambda;
    x = hill_climb_step(obj, lambda, x, rng);
    result.trace.push_back(x);
    if (obj.values[x] < result.best_value) {
      result.best_value = obj.values[x];
      result.best_vertex = x;
    }
  }
  return result;
}

}  // namespace markov
