#include "fbrooks/bounds.hpp"

#include "fbrooks/structure.hpp"

namespace fbrooks {

Rational molloy_reed_bound(const Graph& g, SearchBudget budget) {
  if (g.order() == 0) return Rational(1, 2);
  return Rational(clique_number(g, budget) + max_degree(g) + 1, 2);
}

std::string to_string(Category c) {
  switch (c) {
    case Category::kComplete: return "Complete";
    case Category::kOddCycle: return "OddCycle";
    case Category::kCliqueEqualsDelta: return "CliqueEqualsDelta";
    case Category::kC8Squared: return "C8Squared";
    case Category::kC5BoxK2: return "C5BoxK2";
    case Category::kBelowDelta: return "BelowDelta";
  }
  return "?";
}

ClassificationVerdict classify(const Graph& g, const ClassifyOptions& options) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "classification needs a connected graph");
  ClassificationVerdict v;
  const int n = g.order();
  v.delta = max_degree(g);
  v.clique = n == 0 ? VertexSet{} : max_clique(g, options.budget);
  v.omega = static_cast<int>(v.clique.size());

  if (g.size() == n * (n - 1) / 2) {
    v.category = Category::kComplete;
  } else if (n % 2 == 1 && is_regular(g) && v.delta == 2) {
    v.category = Category::kOddCycle;
  } else if (v.omega == v.delta) {
    v.category = Category::kCliqueEqualsDelta;
  } else if (n == 8 && is_regular(g) && v.delta == 4 &&
             (v.isomorphism = find_isomorphism(g, cycle_power(8, 2), options.budget))) {
    v.category = Category::kC8Squared;
  } else if (n == 10 && is_regular(g) && v.delta == 5 &&
             (v.isomorphism = find_isomorphism(
                  g, strong_product(make_cycle(5), make_complete(2)), options.budget))) {
    v.category = Category::kC5BoxK2;
  } else {
    v.category = Category::kBelowDelta;
  }

  if (options.strict) {
    ChiFOptions lp;
    lp.budget = options.budget;
    lp.with_dual = false;
    v.chi_f = chi_f(g, lp);
    bool at_least_delta = *v.chi_f >= Rational(v.delta);
    if (at_least_delta != (v.category != Category::kBelowDelta))
      throw Error(ErrorCode::kInvariantViolation,
                  "category " + to_string(v.category) + " disagrees with chi_f = " +
                      v.chi_f->str() + " and Delta = " + std::to_string(v.delta));
  }
  return v;
}

std::vector<VertexSet> components_without(const Graph& g, Vertex u, Vertex v) {
  Subgraph rest = delete_vertices(g, VertexSet{u, v});
  std::vector<VertexSet> out;
  for (const auto& c : connected_components(rest.graph)) {
    std::vector<Vertex> ids;
    for (Vertex x : c) ids.push_back(rest.to_parent[x]);
    out.emplace_back(std::move(ids));
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> find_two_cuts(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (components_without(g, u, v).size() > 1) out.emplace_back(u, v);
  return out;
}

Cut2Bound cut2_upper_bound(const Graph& g, Vertex u, Vertex v, const VertexSet& side1,
                           const ChiFOptions& options) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
    throw Error(ErrorCode::kInvalidArgument, "cut needs two distinct vertices");
  for (Vertex x : side1)
    if (!g.has_vertex(x) || x == u || x == v)
      throw Error(ErrorCode::kNotASeparator, "side contains a cut vertex or an invalid id");
  std::vector<Vertex> rest;
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != u && x != v && !side1.contains(x)) rest.push_back(x);
  VertexSet side2(rest);
  if (side1.empty() || side2.empty())
    throw Error(ErrorCode::kNotASeparator, "both sides must contain a vertex outside the cut");
  for (Vertex x : side1)
    for (Vertex y : g.neighbors(x))
      if (side2.contains(y))
        throw Error(ErrorCode::kNotASeparator,
                    "edge (" + std::to_string(x) + "," + std::to_string(y) + ") crosses the cut");

  VertexSet cut{u, v};
  Subgraph g1 = induced_subgraph(g, side1.unite(cut));
  Subgraph g2 = induced_subgraph(g, side2.unite(cut));
  Vertex u2 = -1, v2 = -1;
  for (Vertex i = 0; i < g2.graph.order(); ++i) {
    if (g2.to_parent[i] == u) u2 = i;
    if (g2.to_parent[i] == v) v2 = i;
  }

  Cut2Bound r;
  r.side1 = chi_f(g1.graph, options);
  if (g.adjacent(u, v)) {
    r.exact = true;
    r.side2 = chi_f(g2.graph, options);
    r.value = std::max(r.side1, r.side2);
    return r;
  }
  r.side2 = chi_f(g2.graph, options);
  r.side2_plus = chi_f(g2.graph.with_edge(u2, v2), options);
  r.side2_merged = chi_f(contract(g2.graph, VertexSet{u2, v2}).graph, options);
  r.value = std::max({r.side1, *r.side2_plus, *r.side2_merged});
  return r;
}

}  // namespace fbrooks
