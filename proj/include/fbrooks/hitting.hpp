#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"
#include "fbrooks/iso.hpp"

namespace fbrooks {

struct FamilyMember {
  std::string name;
  Graph pattern;
  CopyMode mode = CopyMode::kInduced;
};

// Patterns whose copies must all be met. Construction checks that the list is
// non-empty and that every pattern is connected.
class HittingFamily {
 public:
  explicit HittingFamily(std::vector<FamilyMember> members);
  const std::vector<FamilyMember>& members() const noexcept { return members_; }

 private:
  std::vector<FamilyMember> members_;
};

// Not-found outcome of a hitting search, with the copy left unmet.
class NotHitError : public Error {
 public:
  NotHitError(const std::string& what, VertexSet witness, std::string pattern)
      : Error(ErrorCode::kNotFound, what), witness_(std::move(witness)),
        pattern_(std::move(pattern)) {}
  const VertexSet& witness() const noexcept { return witness_; }
  const std::string& pattern() const noexcept { return pattern_; }

 private:
  VertexSet witness_;
  std::string pattern_;
};

struct HittingOptions {
  bool extend_to_maximal = false;
  SearchBudget budget = {};
};

// Smallest independent set meeting every maximum clique (iterative deepening
// on the size). Throws NotHitError when none exists.
VertexSet stable_set_meeting_max_cliques(const Graph& g, const HittingOptions& options = {});

// One vertex per part, pairwise non-adjacent. Checks the hypothesis that each
// vertex of part V_i has at most min{k, |V_i| - k} neighbours outside V_i.
VertexSet stable_transversal_of_clique_partition(const Graph& g,
                                                 const std::vector<VertexSet>& parts, int k,
                                                 SearchBudget budget = {});

// Vertex sets of every copy of every family member.
std::vector<std::pair<std::string, VertexSet>> enumerate_family_copies(
    const Graph& g, const HittingFamily& family, SearchBudget budget = {});

// Independent set meeting every copy. Throws NotHitError when none exists.
VertexSet hitting_independent_set(const Graph& g, const HittingFamily& family,
                                  const HittingOptions& options = {});

// General search over an explicit list of sets.
std::optional<VertexSet> independent_hitting_set(const Graph& g,
                                                 const std::vector<VertexSet>& copies,
                                                 std::optional<int> max_size,
                                                 SearchBudget budget,
                                                 std::size_t* unmet_copy = nullptr);

VertexSet extend_to_maximal_independent(const Graph& g, const VertexSet& s);

enum class LemmaId { kSixToFive, kFiveToFourOne, kFiveToFourTwo };

struct LemmaReport {
  LemmaId lemma;
  bool connected = false;
  int delta = 0;
  int omega = 0;
  bool delta_ok = false;
  bool omega_ok = false;
  bool excluded_graph = false;  // is C_{2l+1} strong K2 for some l >= 2
  bool all_pass = false;
};

LemmaReport check_lemma_hypotheses(const Graph& g, LemmaId lemma);
// Patterns removed by each step: K5 and C5xK2; K4; K4 and C8^2. All induced.
HittingFamily lemma_family(LemmaId lemma);
std::string to_string(LemmaId lemma);
LemmaId lemma_from_string(std::string_view name);

// Is g isomorphic to C_{2l+1} strong K2 for some l >= 2?
bool is_odd_cycle_times_k2(const Graph& g);

}  // namespace fbrooks
