#pragma once

#include <cstddef>
#include <vector>

namespace markov {

// Dense row-major matrix. Everything in this library runs at desk scale
// (a few thousand states at most), so there is no sparse path.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

namespace linalg {

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> row_times_matrix(const std::vector<double>& v, const Matrix& m);
Matrix transpose(const Matrix& m);

// Solves A X = B by Gaussian elimination with partial pivoting.
// Throws Error("SingularSystem") when a pivot vanishes.
Matrix solve(Matrix a, Matrix b);
std::vector<double> solve(Matrix a, std::vector<double> b);
Matrix invert(const Matrix& a);

// All eigenvalues of a symmetric matrix by the cyclic Jacobi method.
// Sweeps until the off-diagonal Frobenius norm drops below `tol`
// (at most `max_sweeps` sweeps; throws Error("NoConvergence") otherwise).
// If `eigenvectors` is non-null it receives the accumulated rotations:
// column j is the unit eigenvector for eigenvalues[j]. Results are sorted
// in descending eigenvalue order.
std::vector<double> jacobi_eigenvalues(Matrix a, Matrix* eigenvectors = nullptr,
                                       double tol = 1e-12, int max_sweeps = 100);

}  // namespace linalg
}  // namespace markov
