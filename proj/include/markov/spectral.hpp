#pragma once

#include <cstddef>
#include <vector>

#include "markov/chain.hpp"
#include "markov/linalg.hpp"

namespace markov {

struct SpectralData {
  std::vector<double> eigenvalues;  // descending; eigenvalues[0] = 1
  double lambda_star = 0.0;         // max_{j >= 2} |lambda_j|
  double gap = 0.0;                 // 1 - lambda_star
  double t_rel = 0.0;               // 1 / gap
};

struct EigenSystem {
  std::vector<double> eigenvalues;  // descending
  Matrix right_eigenvectors;        // column j pairs with eigenvalues[j]
};

// A = D_pi^{1/2} P D_pi^{-1/2}, entrywise sqrt(pi_x/pi_y) P(x,y); symmetric
// whenever (P, pi) satisfies detail balance. Rejects non-reversible input,
// since the spectral theory here is stated for reversible chains.
Matrix symmetrize(const TransitionMatrix& p, const DistributionVector& pi);

// Eigenvalues of P (equal to those of the symmetrized A) by cyclic Jacobi,
// plus the derived gap/relaxation quantities.
SpectralData spectrum(const TransitionMatrix& p, const DistributionVector& pi);

// Same, also returning right eigenvectors of P recovered from the rotations
// (v_j = D_pi^{-1/2} u_j).
EigenSystem spectrum_with_vectors(const TransitionMatrix& p, const DistributionVector& pi);

struct MixingBounds {
  double lower = 0.0;  // (t_rel - 1) ln(1/(2 eps))
  double upper = 0.0;  // ln(1/(eps pi_min)) t_rel
};

MixingBounds mixing_bounds(const SpectralData& spec, double pi_min, double eps);

// Closed forms: cos(2 pi j / n) for the simple walk on the n-cycle, and
// 1 - k/dim with multiplicity C(dim, k) for the lazy hypercube walk.
// Both returned in descending order.
std::vector<double> cycle_spectrum(std::size_t n);
std::vector<double> lazy_hypercube_spectrum(std::size_t dim);

}  // namespace markov
