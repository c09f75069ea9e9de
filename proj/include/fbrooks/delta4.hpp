#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbrooks/error.hpp"
#include "fbrooks/fold.hpp"
#include "fbrooks/graph.hpp"
#include "fbrooks/rational.hpp"

// Fold colorings of K4-free graphs with maximum degree at most 4, built from
// 4-colorings of one contracted graph per color class of an auxiliary graph.
namespace fbrooks {

enum class SelectionKind { kSmallDegree, kNonEdgePair, kIndependentTriple, kDoublePair };
std::string to_string(SelectionKind kind);

// S(x) for one vertex. Vertices of s1 carry label 1, those of s2 label 2.
struct Selection {
  Vertex x = -1;
  SelectionKind kind = SelectionKind::kSmallDegree;
  VertexSet s1;
  std::optional<VertexSet> s2;
  // doublePair only: false when no pairing avoided the forbidden subgraphs
  // and the first pairing was kept anyway
  bool validated = true;

  VertexSet all() const;
  int label_of(Vertex v) const;  // 1, 2, or 0 when v is not in S(x)
  // 0: degree <= 3, 1: independent triple, 2: double pair
  int stratum() const;
};

// Every pairing of Γ(x) produced K5minus or G0 after contraction. `s1`, `s2`
// are the last pairing tried; `witness` lists the G-vertices of the copy,
// with a contracted pair standing for its fat vertex.
class NoValidSelectionError : public Error {
 public:
  NoValidSelectionError(const std::string& what, VertexSet s1, VertexSet s2, VertexSet witness,
                        std::string pattern)
      : Error(ErrorCode::kNoValidSelection, what), s1_(std::move(s1)), s2_(std::move(s2)),
        witness_(std::move(witness)), pattern_(std::move(pattern)) {}
  const VertexSet& s1() const noexcept { return s1_; }
  const VertexSet& s2() const noexcept { return s2_; }
  const VertexSet& witness() const noexcept { return witness_; }
  const std::string& pattern() const noexcept { return pattern_; }

 private:
  VertexSet s1_, s2_, witness_;
  std::string pattern_;
};

struct SelectOptions {
  // keep the first pairing instead of throwing no-valid-selection
  bool allow_unvalidated = false;
  SearchBudget budget = {};
};

// Throws input-violation when Γ(x) has no admissible set (degree above 4 or a
// K4 through x).
Selection select_S(const Graph& g, Vertex x, const SelectOptions& options = {});
std::vector<Selection> select_all(const Graph& g, const SelectOptions& options = {});

// Does G/S1/S2 contain K5minus or G0 as a subgraph? Returns the pattern name
// and the contracted-graph vertices of the first copy found.
struct ForbiddenHit {
  std::string pattern;
  VertexSet witness;  // in G ids, fat vertices expanded
};
std::optional<ForbiddenHit> forbidden_after_contraction(const Graph& g, const VertexSet& s1,
                                                        const VertexSet& s2,
                                                        SearchBudget budget = {});

enum class NeighborhoodMode { kPattern, kConservative };
std::string to_string(NeighborhoodMode mode);

inline constexpr std::array<int, 6> kRelationOrders = {1, 2, 3, 4, 5, 7};

struct NeighborhoodHit {
  Vertex v;
  std::vector<Vertex> path;  // u ... v
};

// N^j(u) with one witnessing path per member. Throws selections-missing when
// `sel` does not hold one selection per vertex in id order.
std::vector<NeighborhoodHit> neighborhood_witnesses(const Graph& g,
                                                    const std::vector<Selection>& sel, Vertex u,
                                                    int j, NeighborhoodMode mode);
VertexSet neighborhoods(const Graph& g, const std::vector<Selection>& sel, Vertex u, int j,
                        NeighborhoodMode mode = NeighborhoodMode::kPattern);

struct AuxEdgeTag {
  Vertex from, to;  // `to` lies in N^j(from); j = 0 for plain adjacency in G
  int j;
  std::vector<Vertex> path;
};

// Per-vertex sizes used by the counting bounds.
struct NeighborhoodCounts {
  std::array<int, 6> n{};  // |N^1| |N^2| |N^3| |N^4| |N^5| |N^7|
  int near = 0;            // |Γ ∪ N^1 ∪ N^2 ∪ N^3|
  int all = 0;             // |Γ ∪ N^1 ∪ ... ∪ N^7|
  int n4_in = 0;           // |{w : u ∈ N^4(w)}|
};

struct AuxiliaryGraph {
  Graph graph;
  NeighborhoodMode mode = NeighborhoodMode::kPattern;
  std::vector<AuxEdgeTag> tags;
  std::vector<NeighborhoodCounts> counts;
};

AuxiliaryGraph build_auxiliary(const Graph& g, const std::vector<Selection>& sel,
                               NeighborhoodMode mode = NeighborhoodMode::kPattern);

// Worst values of the counted quantities over vertices with a double pair.
struct CapReport {
  int near = 0, n4 = 0, n5 = 0, n7 = 0, all = 0;
  bool ok() const { return near <= 36 && n4 <= 36 && n5 <= 24 && n7 <= 4 && all <= 96; }
};
CapReport neighborhood_caps(const AuxiliaryGraph& aux, const std::vector<Selection>& sel);

struct ClassColoring {
  int k = 0;
  std::vector<int> color;  // per vertex, 0-based
  std::vector<VertexSet> classes;
  std::vector<Vertex> order;
  std::array<int, 3> max_forbidden{};  // per stratum
};

inline constexpr std::array<int, 3> kForbiddenCaps = {39, 39, 132};

// Greedy in stratum order, ascending id inside a stratum, smallest free color.
// In pattern mode k <= 133 is checked (invariant-violation otherwise).
ClassColoring greedy_class_coloring(const AuxiliaryGraph& aux, const std::vector<Selection>& sel);

struct ClassGraph {
  Graph graph;
  std::vector<VertexSet> members;  // G(X) vertex -> G vertices it stands for
  std::optional<Vertex> w1, w2;
  VertexSet cls;      // X
  VertexSet removed;  // deleted neighbours of X, colored during assembly
};

// Throws class-invalid when X is not independent in G, two selections of X
// overlap or are joined by an edge, or an S-set meets X.
ClassGraph build_class_graph(const Graph& g, const std::vector<Selection>& sel,
                             const VertexSet& cls);

class NotFourColorableError : public Error {
 public:
  NotFourColorableError(const std::string& what, VertexSet critical, VertexSet degree_four,
                        bool gallai_forest)
      : Error(ErrorCode::kNotFourColorable, what), critical_(std::move(critical)),
        degree_four_(std::move(degree_four)), gallai_forest_(gallai_forest) {}
  // vertex-critical subgraph of G(X), in G(X) ids
  const VertexSet& critical() const noexcept { return critical_; }
  const VertexSet& degree_four() const noexcept { return degree_four_; }
  bool gallai_forest() const noexcept { return gallai_forest_; }

 private:
  VertexSet critical_, degree_four_;
  bool gallai_forest_;
};

// Colors 0..3 per G(X) vertex.
std::vector<int> four_color_class_graph(const ClassGraph& cg, SearchBudget budget = {});

// Greedy 5-coloring that colors w1, w2 first; always succeeds when the other
// vertices have degree at most 4.
std::optional<std::vector<int>> greedy_five_coloring(const ClassGraph& cg);

// Palette block i is {4i, ..., 4i+3}. Throws assembly-conflict when the
// result fails verification.
FoldColoring assemble_fold_coloring(const Graph& g, const std::vector<ClassGraph>& classes,
                                    const std::vector<std::vector<int>>& colorings);

struct PipelineOptions {
  NeighborhoodMode mode = NeighborhoodMode::kPattern;
  bool retry_conservative = true;
  // keep an unvalidated pairing rather than stopping with no-valid-selection
  bool allow_unvalidated = true;
  SearchBudget budget = {};
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct PipelineReport {
  NeighborhoodMode requested = NeighborhoodMode::kPattern;
  NeighborhoodMode used = NeighborhoodMode::kPattern;
  std::optional<std::string> retry_reason;
  int k = 0;
  Rational ratio;  // 4k / (k+1)
  bool within_bound = false;  // ratio <= 4 - 2/67
  std::array<int, 4> kinds{};  // per SelectionKind
  int unvalidated = 0;
  CapReport caps;
  std::array<int, 3> max_forbidden{};
  int aux_edges = 0;
  std::vector<int> class_sizes;
  std::vector<int> class_graph_orders;
  std::vector<StageTiming> timings;
};

struct PipelineResult {
  FoldColoring coloring;
  PipelineReport report;
};

// Stage failures are rethrown as PipelineError naming the stage.
class PipelineError : public Error {
 public:
  PipelineError(ErrorCode code, std::string stage, const std::string& what)
      : Error(code, stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Rejects disconnected input (not-connected) and, with input-violation, a K4,
// a vertex of degree above 4, or a graph isomorphic to C8^2.
PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options = {});

nlohmann::ordered_json report_to_json(const PipelineReport& r, bool with_timings = false);

}  // namespace fbrooks
