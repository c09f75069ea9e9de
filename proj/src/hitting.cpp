#include "fbrooks/hitting.hpp"

#include <algorithm>

#include "fbrooks/catalog.hpp"
#include "fbrooks/structure.hpp"

namespace fbrooks {

HittingFamily::HittingFamily(std::vector<FamilyMember> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::kInvalidArgument, "hitting family is empty");
  for (const auto& m : members_)
    if (m.pattern.order() == 0 || !is_connected(m.pattern))
      throw Error(ErrorCode::kInvalidArgument,
                  "pattern \"" + m.name + "\" must be a non-empty connected graph");
}

VertexSet extend_to_maximal_independent(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.contains(v)) continue;
    bool free = true;
    for (Vertex u : out)
      if (g.adjacent(u, v)) free = false;
    if (free) out.insert(v);
  }
  return out;
}

namespace {

class HitSearch {
 public:
  HitSearch(const Graph& g, const std::vector<VertexSet>& copies, std::optional<int> max_size,
            SearchBudget budget)
      : adj_(adjacency_masks(g)), max_size_(max_size), nodes_(budget) {
    for (const auto& c : copies) {
      copies_.push_back(to_mask(c));
      low_.push_back(c.empty() ? -1 : c[0]);
    }
  }

  std::optional<VertexSet> run() {
    if (descend(VertexMask{}, VertexMask{}, 0, true)) return from_mask(found_);
    return std::nullopt;
  }

  std::size_t root_copy() const { return root_copy_; }

 private:
  bool descend(const VertexMask& chosen, const VertexMask& blocked, int size, bool root) {
    if (!nodes_.tick())
      throw ResourceLimitError("hitting search exceeded node budget", nodes_.count());
    int pick = -1;
    std::size_t pick_free = 0;
    for (std::size_t i = 0; i < copies_.size(); ++i) {
      if ((copies_[i] & chosen).any()) continue;
      std::size_t free = (copies_[i] & ~blocked).count();
      if (pick < 0 || free < pick_free || (free == pick_free && low_[i] < low_[pick])) {
        pick = static_cast<int>(i);
        pick_free = free;
      }
    }
    if (root && pick >= 0) root_copy_ = static_cast<std::size_t>(pick);
    if (pick < 0) {
      found_ = chosen;
      return true;
    }
    if (pick_free == 0) return false;
    if (max_size_ && size >= *max_size_) return false;
    VertexMask options = copies_[pick] & ~blocked;
    for (std::size_t v = options._Find_first(); v < options.size(); v = options._Find_next(v)) {
      VertexMask c = chosen, b = blocked | adj_[v];
      c.set(v);
      b.set(v);
      if (descend(c, b, size + 1, false)) return true;
    }
    return false;
  }

  std::vector<VertexMask> adj_;
  std::vector<VertexMask> copies_;
  std::vector<Vertex> low_;
  std::optional<int> max_size_;
  NodeCounter nodes_;
  VertexMask found_;
  std::size_t root_copy_ = 0;
};

}  // namespace

std::optional<VertexSet> independent_hitting_set(const Graph& g,
                                                 const std::vector<VertexSet>& copies,
                                                 std::optional<int> max_size,
                                                 SearchBudget budget,
                                                 std::size_t* unmet_copy) {
  HitSearch s(g, copies, max_size, budget);
  auto r = s.run();
  if (!r && unmet_copy) *unmet_copy = s.root_copy();
  return r;
}

VertexSet stable_set_meeting_max_cliques(const Graph& g, const HittingOptions& options) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph must be connected");
  if (g.order() == 0) return {};
  auto cliques = maximum_cliques(g, options.budget);
  std::size_t unmet = 0;
  if (!independent_hitting_set(g, cliques, std::nullopt, options.budget, &unmet))
    throw NotHitError("no independent set meets every maximum clique", cliques[unmet],
                      "maximum clique");
  for (int size = 1;; ++size) {
    auto r = independent_hitting_set(g, cliques, size, options.budget);
    if (r) return options.extend_to_maximal ? extend_to_maximal_independent(g, *r) : *r;
  }
}

VertexSet stable_transversal_of_clique_partition(const Graph& g,
                                                 const std::vector<VertexSet>& parts, int k,
                                                 SearchBudget budget) {
  std::vector<int> part_of(g.order(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_clique(g, parts[i]))
      throw Error(ErrorCode::kInvalidArgument, "part " + std::to_string(i) + " is not a clique");
    for (Vertex v : parts[i]) {
      if (part_of[v] >= 0)
        throw Error(ErrorCode::kInvalidArgument,
                    "vertex " + std::to_string(v) + " lies in two parts");
      part_of[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (part_of[v] < 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " lies in no part");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& part = parts[part_of[v]];
    int outside = 0;
    for (Vertex u : g.neighbors(v))
      if (part_of[u] != part_of[v]) ++outside;
    int allowed = std::min(k, static_cast<int>(part.size()) - k);
    if (outside > allowed)
      throw Error(ErrorCode::kHypothesisViolation,
                  "vertex " + std::to_string(v) + " has " + std::to_string(outside) +
                      " neighbours outside its part, more than " + std::to_string(allowed));
  }
  std::size_t unmet = 0;
  auto r = independent_hitting_set(g, parts, std::nullopt, budget, &unmet);
  if (!r)
    throw NotHitError("no independent transversal exists", parts.empty() ? VertexSet{} : parts[unmet],
                      "part");
  return *r;
}

std::vector<std::pair<std::string, VertexSet>> enumerate_family_copies(
    const Graph& g, const HittingFamily& family, SearchBudget budget) {
  std::vector<std::pair<std::string, VertexSet>> out;
  for (const auto& m : family.members()) {
    std::vector<VertexSet> sets;
    const int k = m.pattern.order();
    if (m.pattern.size() == k * (k - 1) / 2) {
      // for cliques both modes coincide
      sets = cliques_of_size(g, k);
    } else {
      for (const auto& emb : find_copies(g, m.pattern, m.mode, budget))
        sets.emplace_back(std::vector<Vertex>(emb.begin(), emb.end()));
      std::sort(sets.begin(), sets.end());
    }
    for (auto& s : sets) out.emplace_back(m.name, std::move(s));
  }
  return out;
}

VertexSet hitting_independent_set(const Graph& g, const HittingFamily& family,
                                  const HittingOptions& options) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph must be connected");
  auto copies = enumerate_family_copies(g, family, options.budget);
  std::vector<VertexSet> sets;
  for (const auto& c : copies) sets.push_back(c.second);
  std::size_t unmet = 0;
  auto r = independent_hitting_set(g, sets, std::nullopt, options.budget, &unmet);
  if (!r)
    throw NotHitError("no independent set meets every copy of " + copies[unmet].first,
                      copies[unmet].second, copies[unmet].first);
  return options.extend_to_maximal ? extend_to_maximal_independent(g, *r) : *r;
}

bool is_odd_cycle_times_k2(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) return false;
  const int t = n / 2;
  if (t < 5 || t % 2 == 0) return false;
  if (!is_regular(g) || g.degree(0) != 5) return false;
  return is_isomorphic(g, strong_product(make_cycle(t), make_complete(2)));
}

LemmaReport check_lemma_hypotheses(const Graph& g, LemmaId lemma) {
  LemmaReport r;
  r.lemma = lemma;
  r.connected = is_connected(g);
  r.delta = max_degree(g);
  r.omega = g.order() == 0 ? 0 : clique_number(g);
  r.excluded_graph = is_odd_cycle_times_k2(g);
  switch (lemma) {
    case LemmaId::kSixToFive:
      r.delta_ok = r.delta <= 6;
      r.omega_ok = r.omega <= 5;
      r.all_pass = r.connected && r.delta_ok && r.omega_ok;
      break;
    case LemmaId::kFiveToFourOne:
    case LemmaId::kFiveToFourTwo:
      r.delta_ok = r.delta <= 5;
      r.omega_ok = r.omega <= 4;
      r.all_pass = r.connected && r.delta_ok && r.omega_ok && !r.excluded_graph;
      break;
  }
  return r;
}

HittingFamily lemma_family(LemmaId lemma) {
  std::vector<FamilyMember> m;
  switch (lemma) {
    case LemmaId::kSixToFive:
      m.push_back({"K5", make_complete(5), CopyMode::kInduced});
      m.push_back({"C5xK2", catalog_graph("C5xK2"), CopyMode::kInduced});
      break;
    case LemmaId::kFiveToFourOne:
      m.push_back({"K4", make_complete(4), CopyMode::kInduced});
      break;
    case LemmaId::kFiveToFourTwo:
      m.push_back({"K4", make_complete(4), CopyMode::kInduced});
      m.push_back({"C8sq", catalog_graph("C8sq"), CopyMode::kInduced});
      break;
  }
  return HittingFamily(std::move(m));
}


std::string to_string(LemmaId lemma) {
  switch (lemma) {
    case LemmaId::kSixToFive: return "6to5";
    case LemmaId::kFiveToFourOne: return "5to41";
    case LemmaId::kFiveToFourTwo: return "5to42";
  }
  return "?";
}

LemmaId lemma_from_string(std::string_view name) {
  if (name == "6to5") return LemmaId::kSixToFive;
  if (name == "5to41") return LemmaId::kFiveToFourOne;
  if (name == "5to42") return LemmaId::kFiveToFourTwo;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown lemma \"" + std::string(name) + "\" (expected 6to5, 5to41, 5to42)");
}

}  // namespace fbrooks
