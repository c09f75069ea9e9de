#include "fbrooks/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fbrooks {

std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g,
                                                            const Graph& h) {
  const int ng = g.order(), nh = h.order(), n = ng + nh;
  auto nbrs = [&](int v) { return v < ng ? g.neighbors(v) : h.neighbors(v - ng); };
  auto shift = [&](int v) { return v < ng ? 0 : ng; };

  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = static_cast<int>(nbrs(v).size());
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (Vertex u : nbrs(v)) around.push_back(color[u + shift(v)]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(color.begin(), color.begin() + ng),
          std::vector<int>(color.begin() + ng, color.end())};
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, const std::vector<int>& cg,
            const std::vector<int>& ch, SearchBudget budget)
      : g_(g), h_(h), cg_(cg), ch_(ch), nodes_(budget),
        map_(g.order(), -1), used_(h.order(), 0) {}

  std::optional<Mapping> run(Vertex first = -1, Vertex image = -1) {
    build_order(first);
    if (first >= 0) {
      if (cg_[first] != ch_[image]) return std::nullopt;
      map_[first] = image;
      used_[image] = 1;
      if (extend(1)) return map_;
      return std::nullopt;
    }
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  void build_order(Vertex first) {
    const int n = g_.order();
    std::map<int, int> class_size;
    for (int c : cg_) ++class_size[c];
    std::vector<char> placed(n, 0);
    std::vector<int> placed_nbrs(n, 0);
    for (int step = 0; step < n; ++step) {
      Vertex pick = -1;
      if (step == 0 && first >= 0) {
        pick = first;
      } else {
        for (Vertex v = 0; v < n; ++v) {
          if (placed[v]) continue;
          if (pick < 0 || placed_nbrs[v] > placed_nbrs[pick] ||
              (placed_nbrs[v] == placed_nbrs[pick] &&
               class_size[cg_[v]] < class_size[cg_[pick]]))
            pick = v;
        }
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (Vertex u : g_.neighbors(pick)) ++placed_nbrs[u];
    }
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    if (!nodes_.tick())
      throw ResourceLimitError("isomorphism search exceeded node budget",
                               nodes_.count());
    Vertex v = order_[pos];
    for (Vertex c = 0; c < h_.order(); ++c) {
      if (used_[c] || ch_[c] != cg_[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j) {
        Vertex w = order_[j];
        ok = g_.adjacent(v, w) == h_.adjacent(c, map_[w]);
      }
      if (!ok) continue;
      map_[v] = c;
      used_[c] = 1;
      if (extend(pos + 1)) return true;
      used_[c] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const std::vector<int>& cg_;
  const std::vector<int>& ch_;
  NodeCounter nodes_;
  Mapping map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<Mapping> find_isomorphism(const Graph& g, const Graph& h,
                                        SearchBudget budget) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (sorted_degrees(g) != sorted_degrees(h)) return std::nullopt;
  auto [cg, ch] = refine_colors(g, h);
  auto a = cg, b = ch;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  return IsoSearch(g, h, cg, ch, budget).run();
}

bool is_isomorphic(const Graph& g, const Graph& h, SearchBudget budget) {
  return find_isomorphism(g, h, budget).has_value();
}

std::optional<Mapping> find_automorphism(const Graph& g, Vertex from, Vertex to,
                                         SearchBudget budget) {
  if (!g.has_vertex(from) || !g.has_vertex(to))
    throw Error(ErrorCode::kInvalidVertex, "automorphism endpoint out of range");
  auto [cg, ch] = refine_colors(g, g);
  return IsoSearch(g, g, cg, ch, budget).run(from, to);
}

bool is_vertex_transitive(const Graph& g, SearchBudget budget) {
  const int n = g.order();
  if (n <= 1) return true;
  if (!is_regular(g)) return false;
  auto [cg, ch] = refine_colors(g, g);
  for (int c : cg)
    if (c != cg[0]) return false;
  // orbit of 0, grown by applying every automorphism found so far
  std::vector<char> in_orbit(n, 0);
  in_orbit[0] = 1;
  std::vector<Mapping> gens;
  for (Vertex v = 1; v < n; ++v) {
    if (in_orbit[v]) continue;
    auto a = IsoSearch(g, g, cg, ch, budget).run(0, v);
    if (!a) return false;
    gens.push_back(*a);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex u = 0; u < n; ++u) {
        if (!in_orbit[u]) continue;
        for (const auto& s : gens)
          if (!in_orbit[s[u]]) {
            in_orbit[s[u]] = 1;
            grew = true;
          }
      }
    }
  }
  return true;
}

// ---- copies ----

namespace {

class CopySearch {
 public:
  CopySearch(const Graph& host, const Graph& pattern, CopyMode mode,
             SearchBudget budget, bool first_only)
      : host_(host), pat_(pattern), mode_(mode), nodes_(budget),
        first_only_(first_only), map_(pattern.order(), -1),
        used_(host.order(), 0) {
    build_order();
  }

  std::vector<Mapping> run() {
    if (pat_.order() <= host_.order()) extend(0);
    return std::move(found_);
  }

 private:
  void build_order() {
    const int k = pat_.order();
    std::vector<char> placed(k, 0);
    std::vector<int> placed_nbrs(k, 0);
    anchor_.assign(k, -1);
    for (int step = 0; step < k; ++step) {
      Vertex pick = -1;
      for (Vertex v = 0; v < k; ++v) {
        if (placed[v]) continue;
        if (pick < 0 || placed_nbrs[v] > placed_nbrs[pick] ||
            (placed_nbrs[v] == placed_nbrs[pick] &&
             pat_.degree(v) > pat_.degree(pick)))
          pick = v;
      }
      for (Vertex w : order_)
        if (pat_.adjacent(pick, w)) {
          anchor_[pick] = w;
          break;
        }
      placed[pick] = 1;
      order_.push_back(pick);
      for (Vertex u : pat_.neighbors(pick)) ++placed_nbrs[u];
    }
  }

  bool try_candidate(std::size_t pos, Vertex v, Vertex c) {
    if (used_[c] || host_.degree(c) < pat_.degree(v)) return true;
    for (std::size_t j = 0; j < pos; ++j) {
      Vertex w = order_[j];
      bool pe = pat_.adjacent(v, w);
      bool he = host_.adjacent(c, map_[w]);
      if (pe && !he) return true;
      if (mode_ == CopyMode::kInduced && !pe && he) return true;
    }
    map_[v] = c;
    used_[c] = 1;
    bool go_on = extend(pos + 1);
    used_[c] = 0;
    map_[v] = -1;
    return go_on;
  }

  // returns false to stop the whole search
  bool extend(std::size_t pos) {
    if (!nodes_.tick())
      throw ResourceLimitError("copy enumeration exceeded node budget",
                               nodes_.count());
    if (pos == order_.size()) {
      std::vector<Vertex> image(map_.begin(), map_.end());
      std::sort(image.begin(), image.end());
      if (seen_.insert(image).second) found_.push_back(map_);
      return !first_only_;
    }
    Vertex v = order_[pos];
    if (anchor_[v] >= 0) {
      for (Vertex c : host_.neighbors(map_[anchor_[v]]))
        if (!try_candidate(pos, v, c)) return false;
    } else {
      for (Vertex c = 0; c < host_.order(); ++c)
        if (!try_candidate(pos, v, c)) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pat_;
  CopyMode mode_;
  NodeCounter nodes_;
  bool first_only_;
  Mapping map_;
  std::vector<char> used_;
  std::vector<Vertex> order_, anchor_;
  std::set<std::vector<Vertex>> seen_;
  std::vector<Mapping> found_;
};

}  // namespace

std::vector<Mapping> find_copies(const Graph& host, const Graph& pattern,
                                 CopyMode mode, SearchBudget budget) {
  return CopySearch(host, pattern, mode, budget, false).run();
}

std::vector<Mapping> find_induced_copies(const Graph& host, const Graph& pattern,
                                         SearchBudget budget) {
  return find_copies(host, pattern, CopyMode::kInduced, budget);
}

std::optional<Mapping> find_copy(const Graph& host, const Graph& pattern,
                                 CopyMode mode, SearchBudget budget) {
  auto found = CopySearch(host, pattern, mode, budget, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace fbrooks
