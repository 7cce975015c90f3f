#include "markov/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

std::size_t stick_break(const double* probs, std::size_t n, RandomSource& rng) {
  const double u = rng.next_unit();
  double cum = 0.0;
  std::size_t last_positive = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (probs[k] <= 0.0) continue;
    cum += probs[k];
    last_positive = k;
    if (u <= cum) return k;
  }
  // Row sums are 1 up to rounding; u can land in the sliver above the
  // accumulated sum.
  return last_positive;
}

}  // namespace

std::size_t sample_discrete(const DistributionVector& pi, RandomSource& rng) {
  return stick_break(pi.probs().data(), pi.size(), rng);
}

std::size_t sample_row(const TransitionMatrix& p, std::size_t x, RandomSource& rng) {
  const Matrix& m = p.matrix();
  std::vector<double> row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(x, j);
  return stick_break(row.data(), row.size(), rng);
}

double inverse_cdf_sample(const std::function<double(double)>& inverse_cdf,
                          RandomSource& rng) {
  return inverse_cdf(rng.next_unit());
}

RejectionResult rejection_sample(const std::function<double(double)>& target_pdf,
                                 const std::function<double(double)>& base_pdf,
                                 const std::function<double(RandomSource&)>& base_sampler,
                                 double bound, RandomSource& rng, std::size_t max_proposals) {
  if (bound < 1.0) throw Error("InvalidBound", "rejection bound must be at least 1");
  RejectionResult result;
  while (result.proposals_used < max_proposals) {
    const double y = base_sampler(rng);
    ++result.proposals_used;
    const double ratio = target_pdf(y) / (bound * base_pdf(y));
    if (ratio > 1.0 + 1e-12)
      throw Error("RatioExceedsOne",
                  "target/(M*base) = " + std::to_string(ratio) + " at " + std::to_string(y));
    if (rng.next_unit() <= ratio) {
      result.value = y;
      return result;
    }
  }
  throw Error("MaxProposalsExceeded",
              "no acceptance within " + std::to_string(max_proposals) + " proposals");
}

std::size_t metropolis_step(const MetropolisSpec& spec, std::size_t x, RandomSource& rng) {
  const std::size_t y = spec.base_sample(x, rng);
  const double a = std::min(1.0, spec.target_ratio(x, y) * spec.base_ratio(x, y));
  const double u = rng.next_unit();
  return (u <= a) ? y : x;
}

TransitionMatrix metropolis_matrix(const TransitionMatrix& base, const DistributionVector& pi) {
  const std::size_t n = base.size();
  if (pi.size() != n) throw Error("DimensionMismatch", "target and base sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    if (pi[i] <= 0.0)
      throw Error("NonPositivePi", "target mass vanishes at state " + std::to_string(i));
  if (!is_irreducible(base)) throw Error("NotIrreducible", "base chain must be irreducible");

  Matrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    double moved = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || base(x, y) == 0.0) continue;
      const double accept = std::min(1.0, pi[y] * base(y, x) / (pi[x] * base(x, y)));
      m(x, y) = base(x, y) * accept;
      moved += m(x, y);
    }
    m(x, x) = 1.0 - moved;
  }
  return TransitionMatrix::from_rows(std::move(m));
}

std::vector<std::size_t> random_transposition_step(std::vector<std::size_t> perm,
                                                   RandomSource& rng) {
  const std::size_t n = perm.size();
  const std::size_t i = static_cast<std::size_t>(rng.next_below(n));
  const std::size_t j = static_cast<std::size_t>(rng.next_below(n));
  if (i != j) std::swap(perm[i], perm[j]);
  return perm;
}

std::vector<int> gibbs_sweep(const std::vector<CoordinateSampler>& conditionals,
                             std::vector<int> state, Scan scan, RandomSource& rng) {
  if (conditionals.size() != state.size())
    throw Error("DimensionMismatch", "one conditional sampler per coordinate required");
  if (scan == Scan::random) {
    const std::size_t i = static_cast<std::size_t>(rng.next_below(state.size()));
    state[i] = conditionals[i](state, rng);
  } else {
    for (std::size_t i = 0; i < state.size(); ++i) state[i] = conditionals[i](state, rng);
  }
  return state;
}

std::vector<std::size_t> run_chain(
    const std::function<std::size_t(std::size_t, RandomSource&)>& kernel, std::size_t start,
    std::size_t steps, std::size_t burn_in, std::size_t thinning, RandomSource& rng) {
  if (thinning < 1) throw Error("InvalidThinning", "thinning must be at least 1");
  std::vector<std::size_t> samples;
  samples.reserve(steps / thinning);
  std::size_t x = start;
  const std::size_t total = burn_in + steps;
  for (std::size_t i = 1; i <= total; ++i) {
    x = kernel(x, rng);
    if (i > burn_in && (i - burn_in) % thinning == 0) samples.push_back(x);
  }
  return samples;
}

}  // namespace markov
