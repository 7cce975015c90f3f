#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "markov/random.hpp"

namespace markov {

using Edge = std::pair<std::size_t, std::size_t>;

// Undirected simple graph on vertices {0, ..., n-1}. Loops {v,v} are
// permitted and count once toward degree. Edges are stored as a sorted set
// of normalized (u <= v) pairs; adjacency lists are built once at
// construction and the whole value is immutable afterwards.
class Graph {
 public:
  Graph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t u, std::size_t v) const;
  bool has_loops() const noexcept { return has_loops_; }

  // Sorted; contains v itself exactly once when the loop {v,v} is present.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  bool has_loops_ = false;
};

Graph cycle_graph(std::size_t n);                 // n >= 3
Graph path_graph(std::size_t n);                  // n >= 2
Graph complete_graph(std::size_t n);              // n >= 1
Graph complete_bipartite_graph(std::size_t n_red, std::size_t n_blue);
Graph hypercube_graph(std::size_t dim);           // dim >= 1; vertex = bitmask
Graph star_graph(std::size_t leaves);             // leaves >= 1; center is vertex 0

// Each of the C(n,2) candidate edges {i,j}, i < j in lexicographic order,
// is included independently with probability p, consuming exactly one unit
// draw per candidate.
Graph erdos_renyi(std::size_t n, double p, RandomSource& rng);

// True iff every vertex is reachable from vertex 0 (a single vertex with no
// edges counts as connected).
bool is_connected(const Graph& g);

}  // namespace markov
