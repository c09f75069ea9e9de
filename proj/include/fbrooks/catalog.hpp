#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fbrooks/graph.hpp"

namespace fbrooks {

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;  // vertex id -> label
  std::string note;                 // how the adjacency was obtained

  Vertex vertex(std::string_view label) const;  // throws not-found
};

const std::vector<CatalogEntry>& pattern_catalog();
std::vector<std::string> catalog_names();
// Throws not-found listing the available keys.
const CatalogEntry& catalog_entry(std::string_view name);
const Graph& catalog_graph(std::string_view name);

}  // namespace fbrooks
