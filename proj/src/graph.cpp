#include "markov/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "markov/error.hpp"

namespace markov {

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n_vertices || v >= n_vertices)
      throw Error("VertexOutOfRange", "edge endpoint exceeds vertex count");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n_vertices, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    if (u != v)
      adjacency_[v].push_back(u);
    else
      has_loops_ = true;
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("SizeTooSmall", "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  if (n < 2) throw Error("SizeTooSmall", "path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error("SizeTooSmall", "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(std::size_t n_red, std::size_t n_blue) {
  if (n_red < 1 || n_blue < 1)
    throw Error("SizeTooSmall", "complete bipartite graph needs vertices on both sides");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n_red; ++i)
    for (std::size_t j = 0; j < n_blue; ++j) edges.emplace_back(i, n_red + j);
  return Graph(n_red + n_blue, std::move(edges));
}

Graph hypercube_graph(std::size_t dim) {
  if (dim < 1) throw Error("SizeTooSmall", "hypercube needs dimension >= 1");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t bit = 0; bit < dim; ++bit) {
      const std::size_t w = v ^ (std::size_t{1} << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw Error("SizeTooSmall", "star needs at least 1 leaf");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph erdos_renyi(std::size_t n, double p, RandomSource& rng) {
  if (n < 1) throw Error("SizeTooSmall", "random graph needs at least 1 vertex");
  if (p < 0.0 || p > 1.0) throw Error("InvalidProbability", "edge probability outside [0,1]");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        frontier.push(w);
      }
  }
  return count == n;
}

}  // namespace markov
