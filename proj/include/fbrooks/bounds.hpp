#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbrooks/fractional.hpp"
#include "fbrooks/graph.hpp"
#include "fbrooks/iso.hpp"
#include "fbrooks/rational.hpp"

namespace fbrooks {

// (omega + Delta + 1) / 2
Rational molloy_reed_bound(const Graph& g, SearchBudget budget = {});

enum class Category { kComplete, kOddCycle, kCliqueEqualsDelta, kC8Squared, kC5BoxK2, kBelowDelta };

std::string to_string(Category c);

struct ClassificationVerdict {
  Category category = Category::kBelowDelta;
  int delta = 0;
  int omega = 0;
  VertexSet clique;                 // a maximum clique
  std::optional<Mapping> isomorphism;  // g -> the named graph for C8Squared / C5BoxK2
  std::optional<Rational> chi_f;    // strict mode only
};

struct ClassifyOptions {
  bool strict = false;  // also solve the LP and check the iff
  SearchBudget budget = {};
};

// Throws not-connected; in strict mode throws invariant-violation when the
// structural category disagrees with chi_f >= Delta.
ClassificationVerdict classify(const Graph& g, const ClassifyOptions& options = {});

struct Cut2Bound {
  Rational value;
  bool exact = false;  // true when uv is an edge: value equals chi_f(g)
  Rational side1;      // chi_f(G1)
  Rational side2;      // chi_f(G2), edge case
  std::optional<Rational> side2_plus;    // chi_f(G2 + uv), non-edge case
  std::optional<Rational> side2_merged;  // chi_f(G2 / uv), non-edge case
};

// `side1` lists the vertices of G1 other than u, v. G2 is induced by the
// remaining vertices together with u, v. Throws not-a-separator.
Cut2Bound cut2_upper_bound(const Graph& g, Vertex u, Vertex v, const VertexSet& side1,
                           const ChiFOptions& options = {});

// All pairs {u,v} (u < v) whose removal leaves a disconnected graph.
std::vector<std::pair<Vertex, Vertex>> find_two_cuts(const Graph& g);

// Vertex sets of the components of g - {u, v}.
std::vector<VertexSet> components_without(const Graph& g, Vertex u, Vertex v);

}  // namespace fbrooks
