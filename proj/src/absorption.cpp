#include "markov/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

// States from which the boundary is reachable, by BFS on reversed edges.
std::vector<char> can_reach(const Matrix& p, const std::vector<char>& is_boundary) {
  const std::size_t n = p.rows();
  std::vector<char> ok(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t b = 0; b < n; ++b)
    if (is_boundary[b]) {
      ok[b] = 1;
      stack.push_back(b);
    }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u)
      if (!ok[u] && p(u, v) > 0.0) {
        ok[u] = 1;
        stack.push_back(u);
      }
  }
  return ok;
}

}  // namespace

AbsorptionAnalysis analyze(const TransitionMatrix& p, const std::vector<std::size_t>& boundary) {
  const std::size_t n = p.size();
  if (boundary.empty()) throw Error("EmptyBoundary", "boundary set is empty");
  std::vector<char> is_boundary(n, 0);
  for (std::size_t b : boundary) {
    if (b >= n) throw Error("StateOutOfRange", "boundary state " + std::to_string(b));
    is_boundary[b] = 1;
  }

  AbsorptionAnalysis out;
  for (std::size_t s = 0; s < n; ++s)
    (is_boundary[s] ? out.boundary : out.interior).push_back(s);
  if (out.interior.empty()) throw Error("BoundaryIsEverything", "no interior states remain");

  // A modeling error (boundary not reachable) would otherwise surface as a
  // singular solve; detect it up front so the diagnostic names the state.
  const std::vector<char> reachable = can_reach(p.matrix(), is_boundary);
  for (std::size_t s : out.interior)
    if (!reachable[s])
      throw Error("BoundaryUnreachable",
                  "no positive-probability path from state " + std::to_string(s));

  const std::size_t d = out.interior.size();
  const std::size_t m = out.boundary.size();
  Matrix i_minus_q(d, d);
  Matrix r(d, m);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      i_minus_q(i, j) = (i == j ? 1.0 : 0.0) - p(out.interior[i], out.interior[j]);
    for (std::size_t j = 0; j < m; ++j) r(i, j) = p(out.interior[i], out.boundary[j]);
  }

  try {
    out.fundamental = linalg::solve(i_minus_q, Matrix::identity(d));
  } catch (const Error& e) {
    // a singular system here means some interior mass never drains
    if (e.code() == "SingularSystem")
      throw Error("BoundaryUnreachable", "the interior-to-boundary system is singular");
    throw;
  }
  out.hit_times.assign(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.hit_times[i] += out.fundamental(i, j);
  out.hit_probs = linalg::multiply(out.fundamental, r);
  return out;
}

double expected_return_time(const TransitionMatrix& p, std::size_t state) {
  if (state >= p.size()) throw Error("StateOutOfRange", std::to_string(state));
  if (!is_irreducible(p))
    throw Error("NotIrreducible", "return times require an irreducible chain");
  const AbsorptionAnalysis a = analyze(p, {state});
  double total = 1.0;
  for (std::size_t i = 0; i < a.interior.size(); ++i)
    total += p(state, a.interior[i]) * a.hit_times[i];
  return total;
}

std::vector<double> harmonic_extend(const TransitionMatrix& p,
                                    const std::vector<std::size_t>& interior,
                                    const std::map<std::size_t, double>& boundary_values) {
  const std::size_t n = p.size();
  std::vector<char> is_interior(n, 0);
  for (std::size_t s : interior) {
    if (s >= n) throw Error("StateOutOfRange", std::to_string(s));
    is_interior[s] = 1;
  }
  for (std::size_t s = 0; s < n; ++s) {
    const bool has_value = boundary_values.count(s) > 0;
    if (is_interior[s] && has_value)
      throw Error("DimensionMismatch",
                  "state " + std::to_string(s) + " is interior but has a boundary value");
    if (!is_interior[s] && !has_value)
      throw Error("DimensionMismatch",
                  "state " + std::to_string(s) + " is boundary but has no value");
  }

  std::vector<std::size_t> boundary;
  for (std::size_t s = 0; s < n; ++s)
    if (!is_interior[s]) boundary.push_back(s);
  const AbsorptionAnalysis a = analyze(p, boundary);

  // h_D = M R f, with f laid out in boundary order.
  std::vector<double> f(a.boundary.size());
  for (std::size_t j = 0; j < a.boundary.size(); ++j) f[j] = boundary_values.at(a.boundary[j]);

  std::vector<double> h(n, 0.0);
  for (std::size_t j = 0; j < a.boundary.size(); ++j) h[a.boundary[j]] = f[j];
  for (std::size_t i = 0; i < a.interior.size(); ++i) {
    double value = 0.0;
    for (std::size_t j = 0; j < a.boundary.size(); ++j) value += a.hit_probs(i, j) * f[j];
    h[a.interior[i]] = value;
  }
  return h;
}

RuinResult gamblers_ruin(std::size_t n, std::size_t start, double up_prob) {
  if (n < 1 || start > n) throw Error("StartOutOfRange", "need 0 <= start <= n, n >= 1");
  if (up_prob <= 0.0 || up_prob >= 1.0)
    throw Error("InvalidProbability", "up probability must lie strictly inside (0,1)");

  RuinResult out;
  if (start == 0 || start == n) {
    out.hit_prob_right = (start == n) ? 1.0 : 0.0;
    out.expected_time = 0.0;
    return out;
  }

  const double k = static_cast<double>(start);
  const double nn = static_cast<double>(n);
  if (up_prob == 0.5) {
    out.hit_prob_right = k / nn;
    out.expected_time = k * (nn - k);
    return out;
  }

  // ((q/p)^k - 1)/((q/p)^n - 1) via expm1 so the p -> 1/2 limit stays
  // accurate.
  const double log_ratio = std::log((1.0 - up_prob) / up_prob);
  out.hit_prob_right = std::expm1(k * log_ratio) / std::expm1(nn * log_ratio);

  // No closed form offered for the biased expected time; use the
  // fundamental matrix of the explicit absorbed chain.
  Matrix m(n + 1, n + 1);
  m(0, 0) = 1.0;
  m(n, n) = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    m(j, j + 1) = up_prob;
    m(j, j - 1) = 1.0 - up_prob;
  }
  const TransitionMatrix chain = TransitionMatrix::from_rows(std::move(m));
  const AbsorptionAnalysis a = analyze(chain, {0, n});
  out.expected_time = a.hit_times[start - 1];  // interior states are 1..n-1
  return out;
}

}  // namespace markov
