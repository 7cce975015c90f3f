#include "markov/io.hpp"

#include <fstream>

#include "markov/error.hpp"

namespace markov {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("ParseError", "graph JSON needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_number_unsigned())
    throw Error("ParseError", "\"vertices\" must be a nonnegative integer");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw Error("ParseError", "each edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return Graph(j["vertices"].get<std::size_t>(), std::move(edges));
}

json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.num_vertices();
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

TransitionMatrix chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix"))
    throw Error("ParseError", "chain JSON needs a \"matrix\" array");
  const auto& rows = j["matrix"];
  if (!rows.is_array() || rows.empty())
    throw Error("ParseError", "\"matrix\" must be a non-empty array of rows");
  const std::size_t n = rows.size();
  Matrix m(n, rows[0].is_array() ? rows[0].size() : 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.cols())
      throw Error("ParseError", "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!rows[i][k].is_number())
        throw Error("ParseError", "non-numeric entry in row " + std::to_string(i));
      m(i, k) = rows[i][k].get<double>();
    }
  }
  TransitionMatrix p = TransitionMatrix::from_rows(std::move(m));
  if (j.contains("states")) {
    const auto& names = j["states"];
    if (!names.is_array() || names.size() != p.size())
      throw Error("ParseError", "\"states\" must list one label per row");
    for (const auto& name : names) p.labels.push_back(name.get<std::string>());
  }
  return p;
}

json chain_to_json(const TransitionMatrix& p) {
  json j;
  if (!p.labels.empty()) j["states"] = p.labels;
  j["matrix"] = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < p.size(); ++k) row.push_back(p(i, k));
    j["matrix"].push_back(std::move(row));
  }
  return j;
}

std::vector<double> objective_values_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw Error("ParseError", "objective JSON needs a \"values\" array");
  std::vector<double> values;
  for (const auto& v : j["values"]) {
    if (!v.is_number()) throw Error("ParseError", "non-numeric objective value");
    values.push_back(v.get<double>());
  }
  for (double v : values)
    if (!std::isfinite(v)) throw Error("ParseError", "objective values must be finite");
  return values;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error("ParseError", std::string(e.what()));
  }
  return j;
}

}  // namespace markov
