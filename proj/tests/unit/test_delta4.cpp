#include <doctest.h>

#include <algorithm>
#include <random>

#include "fbrooks/catalog.hpp"
#include "fbrooks/delta4.hpp"
#include "fbrooks/fractional.hpp"
#include "fbrooks/random_graphs.hpp"
#include "fbrooks/structure.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace fbrooks;
using testing::q;

namespace {

constexpr SelectOptions kLenient{true, {}};

Graph random_d4(int n, std::mt19937_64& rng) { return random_k4free_graph(n, 4, 1.0, rng); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvariantViolation;
}

TEST_CASE("selection by neighbourhood type") {
  SUBCASE("degree at most two") {
    auto s = select_S(make_path(3), 1);
    CHECK(s.kind == SelectionKind::kSmallDegree);
    CHECK(s.all().empty());
    CHECK(s.stratum() == 0);
  }
  SUBCASE("degree three takes the first non-edge") {
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto s = select_S(g, 0);
    CHECK(s.kind == SelectionKind::kNonEdgePair);
    CHECK(s.s1 == VertexSet{1, 3});
    CHECK_FALSE(s.s2);
    CHECK(s.label_of(1) == 1);
    CHECK(s.label_of(2) == 0);
    CHECK(s.stratum() == 0);
  }
  SUBCASE("degree four with an independent triple") {
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto s = select_S(star, 0);
    CHECK(s.kind == SelectionKind::kIndependentTriple);
    CHECK(s.s1 == VertexSet{1, 2, 3});
    CHECK(s.stratum() == 1);
    Graph g = star.with_edge(1, 2);
    CHECK(select_S(g, 0).s1 == VertexSet{1, 3, 4});
  }
  SUBCASE("degree four with independence number two") {
    // x joined to a four-cycle 1-2-3-4
    Graph w(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto s = select_S(w, 0);
    CHECK(s.kind == SelectionKind::kDoublePair);
    REQUIRE(s.s2);
    CHECK(s.s1 == VertexSet{1, 3});
    CHECK(*s.s2 == VertexSet{2, 4});
    CHECK(s.validated);
    CHECK(s.label_of(4) == 2);
    CHECK(s.stratum() == 2);
  }
  SUBCASE("input violations") {
    CHECK(code_of([] { select_S(make_complete(4), 0); }) == ErrorCode::kInputViolation);
    Graph star5(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(code_of([&] { select_S(star5, 0); }) == ErrorCode::kInputViolation);
  }
  for (auto k : {SelectionKind::kSmallDegree, SelectionKind::kNonEdgePair,
                 SelectionKind::kIndependentTriple, SelectionKind::kDoublePair})
    CHECK_FALSE(to_string(k).empty());
}

TEST_CASE("bad-triple graphs admit no valid pairing at x") {
  for (const char* name : {"H2", "H3", "H4", "H5", "H6", "H1minus"}) {
    CAPTURE(name);
    const Graph& g = catalog_graph(name);
    try {
      select_S(g, 0);
      FAIL("expected no-valid-selection");
    } catch (const NoValidSelectionError& e) {
      CHECK(e.code() == ErrorCode::kNoValidSelection);
      CHECK((e.pattern() == "K5minus" || e.pattern() == "G0"));
      CHECK_FALSE(e.witness().empty());
      CHECK(e.s1().size() == 2);
      CHECK(e.s2().size() == 2);
    }
    auto lenient = select_S(g, 0, kLenient);
    CHECK(lenient.kind == SelectionKind::kDoublePair);
    CHECK_FALSE(lenient.validated);
  }
}

// K5minus as a subgraph of G/S1/S2, checked with the brute-force copy finder.
bool k5minus_after(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  auto c = contract_all(g, std::vector<VertexSet>{s1, s2});
  return !oracle::copies(c.graph, catalog_graph("K5minus"), false).empty();
}

TEST_CASE("selection soundness") {
  std::mt19937_64 rng(101);
  int pairs = 0;
  for (int i = 0; i < 40; ++i) {
    Graph g = random_d4(8 + i % 10, rng);
    auto sel = select_all(g, kLenient);
    REQUIRE(sel.size() == static_cast<std::size_t>(g.order()));
    for (const auto& s : sel) {
      CAPTURE(oracle::show(g));
      CAPTURE(s.x);
      VertexSet nb = neighborhood(g, s.x);
      CHECK(s.all().minus(nb).empty());
      switch (s.kind) {
        case SelectionKind::kSmallDegree:
          CHECK(g.degree(s.x) <= 2);
          break;
        case SelectionKind::kNonEdgePair:
          CHECK(g.degree(s.x) == 3);
          CHECK(s.s1.size() == 2);
          CHECK(is_independent(g, s.s1));
          break;
        case SelectionKind::kIndependentTriple:
          CHECK(g.degree(s.x) == 4);
          CHECK(s.s1.size() == 3);
          CHECK(is_independent(g, s.s1));
          break;
        case SelectionKind::kDoublePair:
          ++pairs;
          REQUIRE(s.s2);
          CHECK(g.degree(s.x) == 4);
          CHECK(oracle::alpha(induced_subgraph(g, nb).graph) == 2);
          CHECK(is_independent(g, s.s1));
          CHECK(is_independent(g, *s.s2));
          CHECK(s.s1.unite(*s.s2) == nb);
          if (s.validated) {
            CHECK_FALSE(forbidden_after_contraction(g, s.s1, *s.s2));
            CHECK_FALSE(k5minus_after(g, s.s1, *s.s2));
          }
          break;
      }
    }
  }
  CHECK(pairs > 0);
}

bool is_walk(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

bool simple(std::vector<Vertex> p) {
  std::sort(p.begin(), p.end());
  return std::adjacent_find(p.begin(), p.end()) == p.end();
}

// Definitions of the first three relations, written out directly.
VertexSet near_oracle(const Graph& g, const std::vector<Selection>& sel, Vertex u, int j) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == u) continue;
    bool hit = false;
    if (j == 1) hit = g.adjacent(u, v) && sel[u].label_of(v) && sel[v].label_of(u);
    if (j == 2)
      for (Vertex w : g.neighbors(u))
        hit = hit || (g.adjacent(w, v) && sel[u].label_of(w) && sel[v].label_of(w));
    if (j == 3)
      for (Vertex a : sel[u].all())
        for (Vertex b : sel[v].all())
          hit = hit || (a != b && a != v && b != u && g.adjacent(a, b));
    if (hit) out.push_back(v);
  }
  return VertexSet(out);
}

TEST_CASE("neighbourhood relations") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_d4(10 + i % 13, rng);
    auto sel = select_all(g, kLenient);
    CAPTURE(oracle::show(g));
    for (Vertex u = 0; u < g.order(); ++u) {
      CAPTURE(u);
      for (int j : kRelationOrders) {
        CAPTURE(j);
        auto pat = neighborhoods(g, sel, u, j, NeighborhoodMode::kPattern);
        auto con = neighborhoods(g, sel, u, j, NeighborhoodMode::kConservative);
        CHECK(pat.minus(con).empty());
        CHECK_FALSE(pat.contains(u));
        if (j <= 3) CHECK(pat == near_oracle(g, sel, u, j));
        if (j >= 4 && sel[u].kind != SelectionKind::kDoublePair) CHECK(pat.empty());
        if (j != 4)
          for (Vertex v : pat) CHECK(neighborhoods(g, sel, v, j).contains(u));
        for (auto mode : {NeighborhoodMode::kPattern, NeighborhoodMode::kConservative})
          for (const auto& h : neighborhood_witnesses(g, sel, u, j, mode)) {
            REQUIRE(h.path.size() == static_cast<std::size_t>(j + 1));
            CHECK(h.path.front() == u);
            CHECK(h.path.back() == h.v);
            CHECK(is_walk(g, h.path));
            CHECK(simple(h.path));
          }
      }
    }
  }
  CHECK(neighborhoods(make_complete(2), select_all(make_complete(2)), 0, 1).empty());
  CHECK(code_of([] { neighborhoods(make_path(3), {}, 0, 1); }) == ErrorCode::kSelectionsMissing);
  auto sel = select_all(make_path(3));
  CHECK(code_of([&] { neighborhoods(make_path(3), sel, 0, 6); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("a seven-path between two double-pair vertices") {
  // u=0 a=1 b=2 c=3 d=4 e1=5 e2=6 w=7 z=8 f1=9 f2=10 v=11 g=12 h=13 i=14 j=15
  Graph g(16, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {1, 2},  {3, 4},   {5, 1},   {5, 2},  {6, 3},
               {6, 4},  {5, 6},  {7, 5},  {7, 6},  {8, 7},  {8, 9},   {8, 10},  {9, 10}, {9, 12},
               {9, 13}, {10, 14}, {10, 15}, {11, 12}, {11, 13}, {11, 14}, {11, 15}, {12, 13}, {14, 15}});
  REQUIRE(is_connected(g));
  REQUIRE(max_degree(g) <= 4);
  REQUIRE_FALSE(find_clique_of_size(g, 4));
  auto sel = select_all(g, kLenient);
  REQUIRE(sel[0].kind == SelectionKind::kDoublePair);
  REQUIRE(sel[11].kind == SelectionKind::kDoublePair);
  auto n7 = neighborhood_witnesses(g, sel, 0, 7, NeighborhoodMode::kPattern);
  REQUIRE(n7.size() == 1);
  CHECK(n7[0].v == 11);
  CHECK(neighborhoods(g, sel, 11, 7) == VertexSet{0});
  auto aux = build_auxiliary(g, sel);
  CHECK(aux.graph.adjacent(0, 11));
  CHECK(aux.counts[0].n[5] == 1);
}

TEST_CASE("auxiliary graph and its tags") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_d4(10 + i % 15, rng);
    auto sel = select_all(g, kLenient);
    for (auto mode : {NeighborhoodMode::kPattern, NeighborhoodMode::kConservative}) {
      auto aux = build_auxiliary(g, sel, mode);
      CHECK(aux.mode == mode);
      REQUIRE(aux.graph.order() == g.order());
      for (auto e : g.edges()) CHECK(aux.graph.adjacent(e.u, e.v));
      std::set<std::pair<Vertex, Vertex>> tagged;
      for (const auto& t : aux.tags) {
        CHECK(aux.graph.adjacent(t.from, t.to));
        tagged.insert(std::minmax(t.from, t.to));
        if (t.j == 0) {
          CHECK(g.adjacent(t.from, t.to));
        } else {
          CHECK(neighborhoods(g, sel, t.from, t.j, mode).contains(t.to));
          CHECK(t.path.size() == static_cast<std::size_t>(t.j + 1));
        }
      }
      for (auto e : aux.graph.edges()) CHECK(tagged.count({e.u, e.v}) == 1);
      if (mode == NeighborhoodMode::kPattern) CHECK(neighborhood_caps(aux, sel).ok());
    }
  }
  for (const Graph& cubic : {make_hypercube(3), make_petersen()}) {
    auto aux = build_auxiliary(cubic, select_all(cubic));
    for (const auto& c : aux.counts) {
      CHECK(c.n[3] == 0);
      CHECK(c.n[4] == 0);
      CHECK(c.n[5] == 0);
    }
  }
  auto empty = build_auxiliary(Graph(), {});
  CHECK(empty.graph.size() == 0);
}

TEST_CASE("greedy class coloring") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_d4(10 + i % 15, rng);
    auto sel = select_all(g, kLenient);
    auto aux = build_auxiliary(g, sel);
    auto cc = greedy_class_coloring(aux, sel);
    CHECK(cc.k == static_cast<int>(cc.classes.size()));
    CHECK(cc.k <= 133);
    for (auto e : aux.graph.edges()) CHECK(cc.color[e.u] != cc.color[e.v]);
    std::size_t covered = 0;
    for (int c = 0; c < cc.k; ++c) {
      CHECK_FALSE(cc.classes[c].empty());
      covered += cc.classes[c].size();
      for (Vertex v : cc.classes[c]) CHECK(cc.color[v] == c);
    }
    CHECK(covered == static_cast<std::size_t>(g.order()));
    for (std::size_t p = 1; p < cc.order.size(); ++p) {
      auto a = std::make_pair(sel[cc.order[p - 1]].stratum(), cc.order[p - 1]);
      auto b = std::make_pair(sel[cc.order[p]].stratum(), cc.order[p]);
      CHECK(a < b);
    }
    std::vector<int> pos(g.order());
    for (std::size_t p = 0; p < cc.order.size(); ++p) pos[cc.order[p]] = static_cast<int>(p);
    for (Vertex v = 0; v < g.order(); ++v) {
      std::set<int> before;
      for (Vertex u : aux.graph.neighbors(v))
        if (pos[u] < pos[v]) before.insert(cc.color[u]);
      CHECK(cc.color[v] <= static_cast<int>(before.size()));
      CHECK_FALSE(before.count(cc.color[v]));
    }
    for (int s = 0; s < 3; ++s) CHECK(cc.max_forbidden[s] <= kForbiddenCaps[s]);
  }
  Graph k1(1);
  auto sel = select_all(k1);
  CHECK(greedy_class_coloring(build_auxiliary(k1, sel), sel).k == 1);
}

TEST_CASE("class graphs") {
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}, {2, 4}});
  auto sel = select_all(g);
  REQUIRE(sel[0].kind == SelectionKind::kNonEdgePair);
  REQUIRE(sel[0].s1 == VertexSet{1, 3});

  auto none = build_class_graph(g, sel, {});
  CHECK(none.graph == g);
  CHECK_FALSE(none.w1);
  CHECK_FALSE(none.w2);

  auto one = build_class_graph(g, sel, {0});
  REQUIRE(one.w1);
  CHECK_FALSE(one.w2);
  CHECK(one.members[*one.w1] == VertexSet{1, 3});
  CHECK(one.removed == VertexSet{2});
  CHECK(one.graph.order() == 2);
  CHECK(one.graph.size() == 1);

  CHECK(code_of([&] { build_class_graph(g, sel, {0, 1}); }) == ErrorCode::kClassInvalid);

  std::mt19937_64 rng(505);
  for (int i = 0; i < 20; ++i) {
    Graph h = random_d4(10 + i % 15, rng);
    auto s = select_all(h, kLenient);
    auto aux = build_auxiliary(h, s);
    auto cc = greedy_class_coloring(aux, s);
    for (const auto& cls : cc.classes) {
      auto cg = build_class_graph(h, s, cls);
      CHECK(cg.cls == cls);
      VertexSet seen;
      for (Vertex v = 0; v < cg.graph.order(); ++v) {
        if (v != cg.w1 && v != cg.w2) CHECK(cg.graph.degree(v) <= 4);
        CHECK(seen.intersect(cg.members[v]).empty());
        seen = seen.unite(cg.members[v]);
      }
      CHECK(seen.unite(cls).unite(cg.removed).size() == static_cast<std::size_t>(h.order()));
      auto five = greedy_five_coloring(cg);
      REQUIRE(five);
      CHECK(is_proper_coloring(cg.graph, *five));
      auto four = four_color_class_graph(cg);
      CHECK(is_proper_coloring(cg.graph, four));
      CHECK(*std::max_element(four.begin(), four.end()) <= 3);
    }
  }
}

TEST_CASE("a K5 class graph is reported with a Gallai diagnosis") {
  ClassGraph cg;
  cg.graph = make_complete(5);
  for (Vertex v = 0; v < 5; ++v) cg.members.push_back(VertexSet{v});
  try {
    four_color_class_graph(cg);
    FAIL("expected not-4-colorable");
  } catch (const NotFourColorableError& e) {
    CHECK(e.critical().size() == 5);
    CHECK(e.degree_four().size() == 5);
    CHECK(e.gallai_forest());
  }
  // K5 plus a pendant: the pendant is not in the critical part
  ClassGraph pend;
  pend.graph = disjoint_union(make_complete(5), make_complete(1)).with_edge(0, 5);
  for (Vertex v = 0; v < 6; ++v) pend.members.push_back(VertexSet{v});
  try {
    four_color_class_graph(pend);
    FAIL("expected not-4-colorable");
  } catch (const NotFourColorableError& e) {
    CHECK(e.critical() == VertexSet{0, 1, 2, 3, 4});
  }
}

void check_result(const Graph& g, const PipelineResult& r) {
  const int k = r.report.k;
  CHECK(r.coloring.a() == 4 * k);
  CHECK(r.coloring.b() == k + 1);
  CHECK(r.report.ratio == q(4 * k, k + 1));
  CHECK(r.report.within_bound == (r.report.ratio <= q(266, 67)));
  CHECK(verify_fold_coloring(g, r.coloring));
  CHECK(oracle::fold_ok(g, r.coloring.a(), r.coloring.b(), r.coloring.assignment()));
}

TEST_CASE("pipeline end to end") {
  SUBCASE("single vertex") {
    auto r = run_pipeline(Graph(1));
    CHECK(r.report.k == 1);
    CHECK(r.coloring.a() == 4);
    CHECK(r.coloring.b() == 2);
    check_result(Graph(1), r);
  }
  SUBCASE("cube") {
    Graph q3 = make_hypercube(3);
    auto r = run_pipeline(q3);
    check_result(q3, r);
    CHECK(r.report.ratio >= chi_f(q3));
  }
  SUBCASE("catalog graphs with degree at most four") {
    for (const char* name : {"H3", "H4", "H5", "H7", "H8", "H9", "H10", "H1minus", "G2+uv"}) {
      CAPTURE(name);
      const Graph& g = catalog_graph(name);
      auto r = run_pipeline(g);
      check_result(g, r);
    }
  }
  SUBCASE("bad-triple graphs can leave a class graph that needs five colors") {
    for (const char* name : {"H2", "H6"}) {
      CAPTURE(name);
      try {
        run_pipeline(catalog_graph(name));
        FAIL("expected not-4-colorable");
      } catch (const PipelineError& e) {
        CHECK(e.code() == ErrorCode::kNotFourColorable);
        CHECK(e.stage() == "four-color");
      }
    }
  }
  SUBCASE("random inputs in both modes") {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 30; ++i) {
      Graph g = random_d4(5 + i % 20, rng);
      CAPTURE(oracle::show(g));
      auto pat = run_pipeline(g);
      check_result(g, pat);
      CHECK(pat.report.caps.ok());
      PipelineOptions con;
      con.mode = NeighborhoodMode::kConservative;
      auto c = run_pipeline(g, con);
      check_result(g, c);
      CHECK(c.report.used == NeighborhoodMode::kConservative);
      CHECK(c.report.aux_edges >= pat.report.aux_edges);
    }
  }
  SUBCASE("deterministic output") {
    std::mt19937_64 rng(707);
    Graph g = random_d4(20, rng);
    auto a = run_pipeline(g);
    auto b = run_pipeline(g);
    CHECK(a.coloring.assignment() == b.coloring.assignment());
    CHECK(report_to_json(a.report).dump() == report_to_json(b.report).dump());
    auto j = report_to_json(a.report);
    CHECK(j["k"] == a.report.k);
    CHECK(j["ratio"] == a.report.ratio.str());
    CHECK_FALSE(j.contains("timings"));
    CHECK(report_to_json(a.report, true).contains("timings"));
  }
}

TEST_CASE("pipeline rejects inputs outside its scope") {
  CHECK(code_of([] { run_pipeline(cycle_power(8, 2)); }) == ErrorCode::kInputViolation);
  CHECK(code_of([] { run_pipeline(catalog_graph("H1")); }) == ErrorCode::kInputViolation);
  CHECK(code_of([] { run_pipeline(make_complete(4)); }) == ErrorCode::kInputViolation);
  Graph star5(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(code_of([&] { run_pipeline(star5); }) == ErrorCode::kInputViolation);
  CHECK(code_of([] { run_pipeline(make_empty(2)); }) == ErrorCode::kNotConnected);
  CHECK(code_of([] { run_pipeline(Graph()); }) == ErrorCode::kInvalidArgument);
  PipelineOptions strict;
  strict.allow_unvalidated = false;
  try {
    run_pipeline(catalog_graph("H2"), strict);
    FAIL("expected a selection failure");
  } catch (const PipelineError& e) {
    CHECK(e.code() == ErrorCode::kNoValidSelection);
    CHECK(e.stage() == "select");
  }
}

}  // namespace
