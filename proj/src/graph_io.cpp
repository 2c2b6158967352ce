#include "mpld/graph_io.hpp"

#include "mpld/errors.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>

namespace mpld {

using json = nlohmann::json;

namespace {

std::vector<Edge> read_edges(const json& doc, const char* key) {
  std::vector<Edge> edges;
  auto it = doc.find(key);
  if (it == doc.end()) return edges;
  if (!it->is_array()) throw ParseError(std::string(key) + ": expected an array of [u, v] pairs");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& e = (*it)[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError(std::string(key) + "[" + std::to_string(i) + "]: expected [u, v] integer pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

nlohmann::ordered_json edges_to_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

} // namespace

DecompositionGraph parse_graph(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph: top level must be an object");
  auto n = doc.find("n");
  if (n == doc.end() || !n->is_number_integer() || n->get<long long>() < 0 || n->get<long long>() > (1LL << 30)) {
    throw ParseError("n: expected a non-negative integer");
  }
  auto ce = read_edges(doc, "ce");
  auto se = read_edges(doc, "se");
  try {
    return DecompositionGraph(n->get<int>(), std::move(ce), std::move(se));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

DecompositionGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string graph_to_json(const DecompositionGraph& dg) {
  nlohmann::ordered_json doc;
  doc["n"] = dg.size();
  doc["ce"] = edges_to_json(dg.conflict_edges());
  doc["se"] = edges_to_json(dg.stitch_edges());
  return doc.dump();
}

} // namespace mpld
