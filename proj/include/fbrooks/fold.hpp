#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"

namespace fbrooks {

// a:b coloring certificate. Construction enforces a >= b >= 1 and sorts each
// colour set; sizes and disjointness are checked by verify_fold_coloring.
class FoldColoring {
 public:
  FoldColoring(int a, int b, std::vector<std::vector<int>> assignment);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  const std::vector<std::vector<int>>& assignment() const noexcept { return sets_; }
  const std::vector<int>& colors(Vertex v) const { return sets_.at(v); }

 private:
  int a_, b_;
  std::vector<std::vector<int>> sets_;
};

struct FoldViolation {
  enum class Kind { kVertexCount, kWrongSize, kOutOfPalette, kRepeatedColor, kEdgeOverlap };
  Kind kind;
  Vertex u = -1;
  Vertex v = -1;  // second endpoint for kEdgeOverlap
  int color = -1;
  std::string describe() const;
};

struct FoldVerdict {
  std::optional<FoldViolation> violation;
  bool valid() const { return !violation; }
  explicit operator bool() const { return valid(); }
};

FoldVerdict verify_fold_coloring(const Graph& g, const FoldColoring& c);

// Exact search; nullopt means proven none. Budget exhaustion throws
// ResourceLimitError.
std::optional<FoldColoring> find_ab_coloring(const Graph& g, int a, int b,
                                             SearchBudget budget = {});

// Smallest a admitting an a:b coloring.
int chi_b(const Graph& g, int b, SearchBudget budget = {});

}  // namespace fbrooks
