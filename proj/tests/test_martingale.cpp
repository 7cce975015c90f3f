#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "markov/absorption.hpp"
#include "markov/chain.hpp"
#include "markov/error.hpp"
#include "markov/martingale.hpp"
#include "markov/models.hpp"
#include "markov/spectral.hpp"
#include "markov/stationary.hpp"

using namespace markov;

TEST_CASE("eigen-martingale values") {
  const std::vector<double> v{5, 3, 1, -1, -3, -5};  // B - 2k for B = 5
  const double lambda = 3.0 / 5.0;
  CHECK(eigen_martingale_value(lambda, v, 2, 1) ==
        doctest::Approx((5.0 / 3.0) * (5.0 / 3.0) * 3.0).epsilon(1e-12));
  CHECK(eigen_martingale_value(1.0, v, 17, 4) == v[4]);
  CHECK(eigen_martingale_value(lambda, v, 0, 2) == v[2]);
  // negative eigenvalues alternate in sign
  CHECK(eigen_martingale_value(-0.5, v, 1, 0) == doctest::Approx(-2.0 * 5.0));
  CHECK(eigen_martingale_value(-0.5, v, 2, 0) == doctest::Approx(4.0 * 5.0));
  CHECK_THROWS_WITH_AS(eigen_martingale_value(0.0, v, 1, 0),
                       doctest::Contains("ZeroEigenvalue"), Error);
}

TEST_CASE("space-time harmonic certificates on the absorbed path") {
  const TransitionMatrix p = testutil::absorbed_path(10);
  const std::vector<std::size_t> interior{1, 2, 3, 4, 5, 6, 7, 8, 9};

  // position itself; absorbing rows keep it harmonic everywhere
  const HarmonicCheck linear = check_space_time_harmonic(
      p, [](std::size_t, std::size_t x) { return static_cast<double>(x); }, 20, 1e-12);
  CHECK(linear.holds);

  // position squared minus time: harmonic on the interior only
  auto quadratic = [](std::size_t n, std::size_t x) {
    return static_cast<double>(x) * static_cast<double>(x) - static_cast<double>(n);
  };
  CHECK(check_space_time_harmonic(p, quadratic, 20, 1e-12, interior).holds);
  CHECK_FALSE(check_space_time_harmonic(p, quadratic, 20, 1e-12).holds);

  // the reflecting path breaks linearity at the ends with violation 1
  const HarmonicCheck reflected = check_space_time_harmonic(
      testutil::reflecting_path(10),
      [](std::size_t, std::size_t x) { return static_cast<double>(x); }, 5, 1e-12);
  CHECK_FALSE(reflected.holds);
  CHECK(reflected.worst_violation == doctest::Approx(1.0));
  CHECK((reflected.worst_state == 0 || reflected.worst_state == 10));
}

TEST_CASE("ehrenfest eigen-martingale is space-time harmonic everywhere") {
  const TransitionMatrix p = ehrenfest_chain(5);
  auto f = [](std::size_t n, std::size_t k) {
    const std::vector<double> v{5, 3, 1, -1, -3, -5};
    return eigen_martingale_value(3.0 / 5.0, v, n, k);
  };
  CHECK(check_space_time_harmonic(p, f, 10, 1e-9).holds);
}

TEST_CASE("exponential martingale needs the cosh normalization") {
  const TransitionMatrix p = testutil::absorbed_path(10);
  std::vector<std::size_t> interior;
  for (std::size_t x = 1; x < 10; ++x) interior.push_back(x);
  const double alpha = 0.5;

  // e^{alpha x} / cosh(alpha)^n passes the one-step average exactly
  auto cosh_version = [alpha](std::size_t n, std::size_t x) {
    return std::exp(alpha * static_cast<double>(x)) /
           std::pow(std::cosh(alpha), static_cast<double>(n));
  };
  CHECK(check_space_time_harmonic(p, cosh_version, 10, 1e-9, interior).holds);

  // e^{alpha x - alpha^2 n / 2} does not
  auto gaussian_version = [alpha](std::size_t n, std::size_t x) {
    return std::exp(alpha * static_cast<double>(x) - 0.5 * alpha * alpha * n);
  };
  CHECK_FALSE(check_space_time_harmonic(p, gaussian_version, 10, 1e-9, interior).holds);
}

TEST_CASE("spectral eigenpairs induce space-time harmonic functions") {
  const TransitionMatrix p = ehrenfest_chain(4);
  const DistributionVector pi =
      DistributionVector::from_probs(testutil::binomial_pmf(4, 0.5));
  const EigenSystem sys = spectrum_with_vectors(p, pi);
  for (std::size_t j = 0; j < sys.eigenvalues.size(); ++j) {
    const double lambda = sys.eigenvalues[j];
    if (std::abs(lambda) < 1e-9) continue;
    std::vector<double> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = sys.right_eigenvectors(i, j);
    auto f = [lambda, &v](std::size_t n, std::size_t x) {
      return eigen_martingale_value(lambda, v, n, x);
    };
    CHECK(check_space_time_harmonic(p, f, 5, 1e-9).holds);
  }
}

TEST_CASE("harmonic extensions are martingales on the interior") {
  const TransitionMatrix p = srw_from_graph(testutil::five_vertex_graph());
  const std::vector<std::size_t> interior{1, 2, 3};
  const std::vector<double> h = harmonic_extend(p, interior, {{0, 0.0}, {4, 1.0}});
  auto f = [&h](std::size_t, std::size_t x) { return h[x]; };
  CHECK(check_space_time_harmonic(p, f, 10, 1e-12, interior).holds);
}

TEST_CASE("optional sampling recovers the ruin quantities") {
  const TransitionMatrix p = testutil::absorbed_path(10);
  const std::vector<std::size_t> boundary{0, 10};

  RandomSource rng(42);
  const MonteCarloEstimate linear = optional_sampling_estimate(
      p, [](std::size_t, std::size_t x) { return static_cast<double>(x); }, boundary, 3,
      100000, rng);
  CHECK(std::abs(linear.mean - 3.0) < 4.0 * linear.std_error);
  // E(X_tau) = 10 q where q is the chance of finishing on the right
  CHECK(std::abs(linear.mean / 10.0 - 0.3) < 4.0 * linear.std_error / 10.0);

  RandomSource rng2(43);
  const MonteCarloEstimate quadratic = optional_sampling_estimate(
      p,
      [](std::size_t n, std::size_t x) {
        return static_cast<double>(x) * static_cast<double>(x) - static_cast<double>(n);
      },
      boundary, 3, 100000, rng2);
  CHECK(std::abs(quadratic.mean - 9.0) < 4.0 * quadratic.std_error);

  // E(tau) = E(X_tau^2) - 9 = 100 * 0.3 - 9 = 21, via an independent run
  RandomSource rng3(44);
  const MonteCarloEstimate squared = optional_sampling_estimate(
      p, [](std::size_t, std::size_t x) { return static_cast<double>(x * x); }, boundary, 3,
      100000, rng3);
  const double inferred_expected_time = squared.mean - quadratic.mean;
  const double se =
      std::sqrt(squared.std_error * squared.std_error + quadratic.std_error * quadratic.std_error);
  CHECK(std::abs(inferred_expected_time - 21.0) < 4.0 * se);

  // starting on the boundary stops immediately with zero variance
  RandomSource rng4(45);
  const MonteCarloEstimate at_boundary = optional_sampling_estimate(
      p, [](std::size_t, std::size_t x) { return static_cast<double>(x); }, boundary, 10, 100,
      rng4);
  CHECK(at_boundary.mean == 10.0);
  CHECK(at_boundary.std_error == 0.0);

  CHECK_THROWS_WITH_AS(
      optional_sampling_estimate(
          srw_from_graph(testutil::hexagon_plus_edge()),
          [](std::size_t, std::size_t) { return 0.0; }, {6}, 0, 10, rng),
      doctest::Contains("BoundaryUnreachable"), Error);
}

TEST_CASE("optional sampling agrees with the exact absorption analysis") {
  RandomSource rng(42);
  for (int rep = 0; rep < 5; ++rep) {
    const TransitionMatrix p = testutil::random_dense_chain(5, rng);
    const std::vector<std::size_t> boundary{0, 4};
    const AbsorptionAnalysis a = analyze(p, boundary);
    // indicator of finishing at state 4 is harmonic with these boundary data
    const std::size_t start = 2;
    RandomSource mc(100 + rep);
    const MonteCarloEstimate est = optional_sampling_estimate(
        p, [](std::size_t, std::size_t x) { return x == 4 ? 1.0 : 0.0; }, boundary, start,
        100000, mc);
    std::size_t row = 0;
    while (a.interior[row] != start) ++row;
    std::size_t col = (a.boundary[0] == 4) ? 0 : 1;
    CHECK(std::abs(est.mean - a.hit_probs(row, col)) < 4.0 * est.std_error);
  }
}

TEST_CASE("polya proportion has flat expectation") {
  RandomSource rng(42);
  const std::size_t a = 1, b = 1;
  const std::size_t reps = 40000;
  for (std::size_t n : {5UL, 10UL, 20UL}) {
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < reps; ++i) {
      RandomSource trial = rng.spawn();
      PolyaState s{a, b, 0};
      for (std::size_t k = 0; k < n; ++k) s = polya_step(s, trial);
      const double y = static_cast<double>(s.black) / static_cast<double>(n + a + b);
      sum += y;
      sum_sq += y * y;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sum_sq / reps - mean * mean) / reps);
    CHECK(std::abs(mean - 0.5) < 4.0 * se);
  }
}
