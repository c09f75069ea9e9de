#include "fbrooks/certificate.hpp"

#include <algorithm>

#include "fbrooks/io.hpp"

namespace fbrooks {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const VertexSet& s) {
  ordered_json a = ordered_json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

ordered_json fold_to_json(const Graph& g, const FoldColoring& c) {
  ordered_json j;
  j["graph"] = to_graph6(g);
  j["a"] = c.a();
  j["b"] = c.b();
  ordered_json assignment = ordered_json::object();
  for (std::size_t v = 0; v < c.assignment().size(); ++v)
    assignment[std::to_string(v)] = c.assignment()[v];
  j["assignment"] = assignment;
  return j;
}

namespace {

[[noreturn]] void bad(const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument, "malformed certificate: " + why);
}

}  // namespace

std::pair<Graph, FoldColoring> fold_from_json(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  for (const char* key : {"graph", "a", "b", "assignment"})
    if (!j.contains(key)) bad(std::string("missing \"") + key + "\"");
  if (!j["graph"].is_string()) bad("\"graph\" must be a graph6 string");
  if (!j["a"].is_number_integer() || !j["b"].is_number_integer()) bad("\"a\" and \"b\" must be integers");
  if (!j["assignment"].is_object()) bad("\"assignment\" must be an object");
  Graph g = from_graph6(j["graph"].get<std::string>());
  std::vector<std::vector<int>> sets(g.order());
  for (const auto& [key, value] : j["assignment"].items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      bad("vertex key \"" + key + "\" is not an integer");
    }
    if (used != key.size() || v < 0 || v >= g.order()) bad("vertex key \"" + key + "\" out of range");
    if (!value.is_array()) bad("colors of vertex " + key + " must be an array");
    for (const auto& c : value) {
      if (!c.is_number_integer()) bad("colors must be integers");
      sets[v].push_back(c.get<int>());
    }
  }
  // a missing vertex keeps an empty set; the verifier reports its size
  return {g, FoldColoring(j["a"].get<int>(), j["b"].get<int>(), std::move(sets))};
}

ordered_json fractional_to_json(const Graph& g, const FractionalSolution& s) {
  ordered_json j;
  j["graph"] = to_graph6(g);
  j["chi_f"] = s.value.str();
  ordered_json primal = ordered_json::array();
  for (std::size_t i = 0; i < s.sets.size(); ++i)
    primal.push_back({{"set", to_json(s.sets[i])}, {"weight", s.weights[i].str()}});
  j["primal"] = primal;
  if (s.dual) {
    ordered_json dual = ordered_json::array();
    for (const auto& y : *s.dual) dual.push_back(y.str());
    j["dual"] = dual;
  }
  return j;
}

FractionalSolution fractional_from_json(const json& j) {
  if (!j.is_object() || !j.contains("chi_f") || !j.contains("primal"))
    bad("expected \"chi_f\" and \"primal\"");
  FractionalSolution s;
  s.value = Rational::parse(j["chi_f"].get<std::string>());
  for (const auto& item : j["primal"]) {
    std::vector<Vertex> members = item.at("set").get<std::vector<Vertex>>();
    s.sets.emplace_back(std::move(members));
    s.weights.push_back(Rational::parse(item.at("weight").get<std::string>()));
  }
  if (j.contains("dual")) {
    std::vector<Rational> dual;
    for (const auto& y : j["dual"]) dual.push_back(Rational::parse(y.get<std::string>()));
    s.dual = std::move(dual);
  }
  return s;
}

}  // namespace fbrooks
