#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "markov/chain.hpp"
#include "markov/distance.hpp"
#include "markov/error.hpp"
#include "markov/optimize.hpp"
#include "markov/samplers.hpp"
#include "markov/stationary.hpp"

using namespace markov;

TEST_CASE("gibbs distribution over vertices") {
  const ObjectiveOnGraph obj = testutil::ridge_objective();

  const DistributionVector flat = gibbs_distribution(obj, 0.0);
  for (std::size_t i = 0; i < 8; ++i) CHECK(flat[i] == doctest::Approx(1.0 / 8.0));

  // at lambda = 50 essentially all mass sits on the global minimizer;
  // check against directly normalized exponentials
  const DistributionVector cold = gibbs_distribution(obj, 50.0);
  CHECK(cold[6] > 0.9999);
  double z = 0.0;
  for (double f : obj.values) z += std::exp(-50.0 * (f - 1.0));
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(cold[i] == doctest::Approx(std::exp(-50.0 * (obj.values[i] - 1.0)) / z));

  const ObjectiveOnGraph constant{cycle_graph(4), {3, 3, 3, 3}};
  for (double lambda : {0.0, 1.0, 25.0}) {
    const DistributionVector pi = gibbs_distribution(constant, lambda);
    for (std::size_t i = 0; i < 4; ++i) CHECK(pi[i] == doctest::Approx(0.25));
  }

  double total = 0.0;
  for (std::size_t i = 0; i < 8; ++i) total += cold[i];
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("mass at the minimizer grows with lambda") {
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  double previous = 0.0;
  for (int lambda = 0; lambda <= 50; ++lambda) {
    const double mass = gibbs_distribution(obj, lambda)[6];
    CHECK(mass >= previous - 1e-12);
    previous = mass;
  }
}

TEST_CASE("hill climb acceptance") {
  // regular graph, downhill move: always accepted
  const ObjectiveOnGraph ring{cycle_graph(6), {6, 5, 4, 3, 2, 1}};
  RandomSource rng(42);
  for (int i = 0; i < 200; ++i) {
    const std::size_t y = hill_climb_step(ring, 3.0, 3, rng);
    // neighbor 4 is downhill and always taken when proposed; neighbor 2 is
    // uphill and may be refused, leaving the walker at 3
    CHECK((y == 4 || y == 2 || y == 3));
  }

  // lambda = 0 reduces to the degree-corrected uniform sampler; its exact
  // chain is the metropolis matrix with a uniform target
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  const TransitionMatrix expected =
      metropolis_matrix(srw_from_graph(obj.graph), DistributionVector::uniform(8));
  std::vector<double> counts(8, 0.0);
  const std::size_t reps = 400000;
  RandomSource stat(7);
  for (std::size_t i = 0; i < reps; ++i) counts[hill_climb_step(obj, 0.0, 3, stat)] += 1.0;
  for (std::size_t y = 0; y < 8; ++y)
    CHECK(std::abs(counts[y] / reps - expected(3, y)) < 0.01);

  CHECK_THROWS_WITH_AS(hill_climb_step(ObjectiveOnGraph{Graph(2, {}), {0, 0}}, 1.0, 0, rng),
                       doctest::Contains("IsolatedVertex"), Error);
}

TEST_CASE("hill climb chain is reversible for the gibbs law") {
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  const DistributionVector pi = gibbs_distribution(obj, 1.0);
  const TransitionMatrix chain = metropolis_matrix(srw_from_graph(obj.graph), pi);
  CHECK(check_reversible(chain, pi, 1e-12).reversible);

  // the direct stationary solve needs a milder temperature: at lambda = 1
  // the target spans forty orders of magnitude and the linear system is
  // numerically near-reducible
  const DistributionVector mild = gibbs_distribution(obj, 0.05);
  const TransitionMatrix mild_chain = metropolis_matrix(srw_from_graph(obj.graph), mild);
  const DistributionVector solved = solve_stationary(mild_chain);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(solved[i] - mild[i]) < 1e-9);
}

TEST_CASE("empirical hill climb matches its exact transition row") {
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  const DistributionVector pi = gibbs_distribution(obj, 1.0);
  const TransitionMatrix exact = metropolis_matrix(srw_from_graph(obj.graph), pi);
  RandomSource rng(42);
  std::vector<double> counts(8, 0.0);
  const std::size_t reps = 400000;
  for (std::size_t i = 0; i < reps; ++i) counts[hill_climb_step(obj, 1.0, 3, rng)] += 1.0;
  for (std::size_t y = 0; y < 8; ++y)
    CHECK(std::abs(counts[y] / reps - exact(3, y)) < 0.01);
}

TEST_CASE("annealing escapes the local minimum") {
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  std::size_t found_global = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomSource rng(seed);
    const AnnealResult r = simulated_annealing(obj, log_schedule(), 10000, 7, rng);
    if (r.best_vertex == 6) ++found_global;
  }
  CHECK(found_global >= 95);
}

TEST_CASE("annealing bookkeeping") {
  const ObjectiveOnGraph constant{cycle_graph(5), {2, 2, 2, 2, 2}};
  RandomSource rng(42);
  const AnnealResult flat = simulated_annealing(constant, log_schedule(), 100, 2, rng);
  CHECK(flat.best_value == 2.0);
  CHECK(flat.trace.size() == 101);
  CHECK(flat.trace.front() == 2);

  // a huge frozen lambda pins the walker at the local minimum
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  std::size_t stuck = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomSource frozen(seed);
    const AnnealResult r = simulated_annealing(
        obj, [](std::size_t) { return 1e6; }, 2000, 3, frozen);
    if (r.best_vertex == 3 && r.best_value == 2.0) ++stuck;
  }
  CHECK(stuck == 20);

  CHECK_THROWS_WITH_AS(simulated_annealing(obj, log_schedule(), 0, 0, rng),
                       doctest::Contains("SizeTooSmall"), Error);

  // schedules must cool monotonically
  CHECK_THROWS_WITH_AS(
      simulated_annealing(
          obj, [](std::size_t t) { return t < 5 ? 1.0 : 0.5; }, 100, 0, rng),
      doctest::Contains("InvalidSchedule"), Error);
}

TEST_CASE("constant-schedule annealing equals a run_chain over hill climb steps") {
  const ObjectiveOnGraph obj = testutil::ridge_objective();
  const double lambda = 1.5;
  RandomSource a(11), b(11);
  const AnnealResult r = simulated_annealing(
      obj, [lambda](std::size_t) { return lambda; }, 500, 0, a);
  auto kernel = [&obj, lambda](std::size_t x, RandomSource& rng) {
    return hill_climb_step(obj, lambda, x, rng);
  };
  const std::vector<std::size_t> path = run_chain(kernel, 0, 500, 0, 1, b);
  CHECK(std::vector<std::size_t>(r.trace.begin() + 1, r.trace.end()) == path);
}
