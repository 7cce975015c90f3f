#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "markov/error.hpp"
#include "markov/linalg.hpp"

using namespace markov;

TEST_CASE("solve and invert") {
  Matrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = -1.0 / 3.0;
  a(1, 0) = -0.5;
  a(1, 1) = 1.0;
  const Matrix inv = linalg::invert(a);
  CHECK(inv(0, 0) == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(inv(0, 1) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(inv(1, 0) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(inv(1, 1) == doctest::Approx(1.2).epsilon(1e-14));

  const std::vector<double> x = linalg::solve(a, std::vector<double>{1.0, 1.0});
  CHECK(x[0] == doctest::Approx(1.6).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.8).epsilon(1e-14));

  Matrix singular(2, 2);
  singular(0, 0) = 1.0;
  singular(0, 1) = 2.0;
  singular(1, 0) = 2.0;
  singular(1, 1) = 4.0;
  CHECK_THROWS_WITH_AS(linalg::invert(singular), doctest::Contains("SingularSystem"), Error);
}

TEST_CASE("jacobi eigenvalues and eigenvectors") {
  // random symmetric matrices: A v = lambda v and the basis is orthonormal
  RandomSource rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 3 + rng.next_below(5);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        a(i, j) = 2.0 * rng.next_unit() - 1.0;
        a(j, i) = a(i, j);
      }
    Matrix vectors;
    const std::vector<double> values = linalg::jacobi_eigenvalues(a, &vectors);
    for (std::size_t j = 0; j + 1 < n; ++j) CHECK(values[j] >= values[j + 1]);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        double av = 0.0;
        for (std::size_t k = 0; k < n; ++k) av += a(i, k) * vectors(k, j);
        CHECK(std::abs(av - values[j] * vectors(i, j)) < 1e-9);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += vectors(i, j) * vectors(i, j);
      CHECK(std::abs(norm - 1.0) < 1e-10);
    }
    // trace equals the eigenvalue sum
    double trace = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    for (double v : values) total += v;
    CHECK(std::abs(trace - total) < 1e-10);
  }
}
