#pragma once

#include <string>

#include <json.hpp>

#include "markov/chain.hpp"
#include "markov/graph.hpp"
#include "markov/optimize.hpp"

namespace markov {

// File formats spoken by the CLI:
//   graph:     {"vertices": n, "edges": [[u,v], ...]}
//   chain:     {"states": ["a", ...] (optional), "matrix": [[...], ...]}
//   objective: {"values": [...]} paired with a graph file
// Malformed structure raises Error("ParseError"); structurally valid input
// that fails domain validation propagates the underlying error
// (RowSumInvalid and friends).

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

TransitionMatrix chain_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const TransitionMatrix& p);

std::vector<double> objective_values_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace markov
