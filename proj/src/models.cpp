#include "markov/models.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "markov/error.hpp"
#include "markov/samplers.hpp"

namespace markov {

PolyaState polya_step(PolyaState s, RandomSource& rng) {
  const double p_black =
      static_cast<double>(s.black) / static_cast<double>(s.black + s.red);
  if (rng.next_unit() < p_black)
    ++s.black;
  else
    ++s.red;
  ++s.step;
  return s;
}

DistributionVector polya_pmf_exact(std::size_t a, std::size_t b, std::size_t steps) {
  if (a < 1 || b < 1) throw Error("SizeTooSmall", "urn needs at least one ball of each color");
  std::vector<double> pmf(a + steps + 1, 0.0);
  pmf[a] = 1.0;
  for (std::size_t n = 0; n < steps; ++n) {
    const double total = static_cast<double>(n + a + b);
    std::vector<double> next(pmf.size(), 0.0);
    for (std::size_t k = a; k <= a + n; ++k) {
      if (pmf[k] == 0.0) continue;
      const double grow = static_cast<double>(k) / total;
      next[k + 1] += pmf[k] * grow;
      next[k] += pmf[k] * (1.0 - grow);
    }
    pmf = std::move(next);
  }
  return DistributionVector::from_probs(std::move(pmf));
}

double srw_z_pmf(std::size_t steps, long long position) {
  const long long n = static_cast<long long>(steps);
  if (position > n || position < -n) return 0.0;
  if ((n + position) % 2 != 0) return 0.0;
  const double heads = static_cast<double>((n + position) / 2);
  const double nn = static_cast<double>(n);
  // log C(n, heads) - n log 2; lgamma keeps this finite well past n = 50.
  const double log_p = std::lgamma(nn + 1.0) - std::lgamma(heads + 1.0) -
                       std::lgamma(nn - heads + 1.0) - nn * std::log(2.0);
  return std::exp(log_p);
}

std::vector<std::uint32_t> exclusion_states(std::size_t ring, std::size_t particles) {
  std::vector<std::uint32_t> states;
  const std::uint32_t limit = std::uint32_t{1} << ring;
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == particles) states.push_back(mask);
  return states;
}

TransitionMatrix exclusion_chain(std::size_t ring, std::size_t particles, SpinDirection dir) {
  if (particles < 1 || particles >= ring)
    throw Error("SizeTooSmall", "need 1 <= particles < ring");
  if (ring > 24) throw Error("StateSpaceTooLarge", "ring length capped at 24 sites");
  const std::vector<std::uint32_t> states = exclusion_states(ring, particles);
  if (states.size() > 10000)
    throw Error("StateSpaceTooLarge", std::to_string(states.size()) + " configurations");

  std::vector<std::size_t> index(std::size_t{1} << ring, 0);
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;

  const double pick = 1.0 / static_cast<double>(particles);
  Matrix m(states.size(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::uint32_t w = states[i];
    for (std::size_t site = 0; site < ring; ++site) {
      if (!(w & (std::uint32_t{1} << site))) continue;
      const std::size_t target = dir == SpinDirection::counterclockwise
                                     ? (site + ring - 1) % ring
                                     : (site + 1) % ring;
      if (w & (std::uint32_t{1} << target)) {
        m(i, i) += pick;  // blocked: the chosen particle stays
      } else {
        const std::uint32_t moved =
            (w & ~(std::uint32_t{1} << site)) | (std::uint32_t{1} << target);
        m(i, index[moved]) += pick;
      }
    }
  }
  return TransitionMatrix::from_rows(std::move(m));
}

std::size_t triangle_count(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.has_edge(j, k) && g.has_edge(i, k)) ++count;
    }
  return count;
}

double triangle_gibbs_ratio(const Graph& g, std::pair<std::size_t, std::size_t> edge,
                            double beta) {
  const auto [u, v] = edge;
  if (u >= g.num_vertices() || v >= g.num_vertices() || u == v)
    throw Error("StateOutOfRange", "edge endpoints invalid");
  // Toggling {u,v} changes the count by the number of common neighbors.
  std::size_t common = 0;
  for (std::size_t w : g.neighbors(u))
    if (w != v && g.has_edge(w, v)) ++common;
  const double delta = g.has_edge(u, v) ? -static_cast<double>(common)
                                        : static_cast<double>(common);
  return std::exp(beta * delta);
}

double cover_time_mean(const Graph& g, std::size_t start, std::size_t trials,
                       RandomSource& rng) {
  if (!is_connected(g)) throw Error("Disconnected", "cover time needs a connected graph");
  if (start >= g.num_vertices()) throw Error("StateOutOfRange", std::to_string(start));
  const std::size_t n = g.num_vertices();
  double total = 0.0;
  std::vector<char> seen(n);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomSource trial = rng.spawn();
    std::fill(seen.begin(), seen.end(), 0);
    seen[start] = 1;
    std::size_t covered = 1;
    std::size_t x = start;
    std::size_t steps = 0;
    while (covered < n) {
      const auto& nbrs = g.neighbors(x);
      x = nbrs[trial.next_below(nbrs.size())];
      ++steps;
      if (!seen[x]) {
        seen[x] = 1;
        ++covered;
      }
    }
    total += static_cast<double>(steps);
  }
  return total / static_cast<double>(trials);
}

}  // namespace markov
