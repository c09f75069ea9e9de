#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fbrooks/catalog.hpp"
#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"
#include "fbrooks/io.hpp"
#include "fbrooks/iso.hpp"
#include "fbrooks/random_graphs.hpp"
#include "fbrooks/structure.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace fbrooks;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInvariantViolation;
}

std::set<oracle::Set> as_sets(const std::vector<Mapping>& maps) {
  std::set<oracle::Set> out;
  for (auto m : maps) {
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction validates input") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 0}});
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::kInvalidVertex);
  CHECK(code_of([] { Graph(3, {{1, 1}}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Graph(-1); }) == ErrorCode::kSizeOutOfRange);
  CHECK(code_of([&] { g.degree(9); }) == ErrorCode::kInvalidVertex);
  CHECK(g.with_edge(0, 2).size() == 3);
  CHECK(g.without_edge(0, 1).size() == 1);
}

TEST_CASE("vertex sets stay sorted and unique") {
  VertexSet s{5, 1, 3, 1};
  CHECK(s.members() == std::vector<Vertex>{1, 3, 5});
  s.insert(2);
  CHECK(s.contains(2));
  CHECK(s.unite(VertexSet{0, 5}).members() == std::vector<Vertex>{0, 1, 2, 3, 5});
  CHECK(s.intersect(VertexSet{3, 4, 5}).members() == std::vector<Vertex>{3, 5});
  CHECK(s.minus(VertexSet{1, 2}).members() == std::vector<Vertex>{3, 5});
}

TEST_CASE("constructors") {
  Graph c82 = cycle_power(8, 2);
  CHECK(c82.order() == 8);
  CHECK(c82.size() == 16);
  CHECK(is_regular(c82));
  CHECK(max_degree(c82) == 4);
  CHECK(make_complete(6).size() == 15);
  CHECK(make_path(5).size() == 4);
  CHECK(make_petersen().size() == 15);
  CHECK(is_regular(make_petersen()));
  CHECK(make_hypercube(3).size() == 12);
  // C_n^k with 2k >= n - 1 is complete
  CHECK(cycle_power(5, 2) == make_complete(5));
}

TEST_CASE("strong product edge count and adjacency") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = testing::random_connected(2 + rng() % 4, 0.5, rng);
    Graph h = testing::random_connected(2 + rng() % 4, 0.5, rng);
    Graph p = strong_product(g, h);
    CHECK(p.order() == g.order() * h.order());
    CHECK(p.size() == g.order() * h.size() + h.order() * g.size() + 2 * g.size() * h.size());
    for (int a = 0; a < g.order(); ++a)
      for (int x = 0; x < h.order(); ++x)
        for (int b = 0; b < g.order(); ++b)
          for (int y = 0; y < h.order(); ++y) {
            if (a == b && x == y) continue;
            bool expect = (a == b || g.adjacent(a, b)) && (x == y || h.adjacent(x, y));
            CHECK(p.adjacent(a * h.order() + x, b * h.order() + y) == expect);
          }
  }
  Graph c5k2 = strong_product(make_cycle(5), make_complete(2));
  CHECK(is_regular(c5k2));
  CHECK(max_degree(c5k2) == 5);
}

TEST_CASE("complement, union, relabel") {
  Graph p = make_petersen();
  CHECK(complement(complement(p)) == p);
  CHECK(complement(p).size() == 45 - 15);
  Graph u = disjoint_union(make_cycle(3), make_path(2));
  CHECK(u.order() == 5);
  CHECK(u.adjacent(3, 4));
  CHECK_FALSE(u.adjacent(2, 3));
  std::vector<Vertex> perm{2, 0, 1};
  Graph r = relabel(make_path(3), perm);
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK_FALSE(r.adjacent(2, 1));
  std::vector<Vertex> bad{0, 0, 1};
  CHECK(code_of([&] { relabel(make_path(3), bad); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("contraction") {
  // C4 0-1-2-3: contracting the diagonal {1,3} gives a path 0-f-2
  Contraction c = contract(make_cycle(4), VertexSet{1, 3});
  CHECK(c.graph.order() == 3);
  CHECK(c.fat == 1);
  CHECK(c.map == std::vector<Vertex>{0, 1, 2, 1});
  CHECK(c.graph.size() == 2);
  CHECK_FALSE(c.graph.adjacent(0, 2));
  // contracting an edge of K4 gives K3
  CHECK(contract(make_complete(4), VertexSet{0, 1}).graph == make_complete(3));
  Contraction e = contract(make_path(3), VertexSet{});
  CHECK(e.graph.order() == 4);
  CHECK(e.graph.degree(3) == 0);
  // two pairs at once: the double contraction of C8^2 through a vertex
  std::vector<VertexSet> pairs{VertexSet{1, 6}, VertexSet{2, 7}};
  Contraction both = contract_all(cycle_power(8, 2), pairs);
  CHECK(both.graph.order() == 6);
  CHECK(both.map[1] == both.map[6]);
  CHECK(both.map[2] == both.map[7]);
}

TEST_CASE("induced subgraphs") {
  Subgraph s = induced_subgraph(make_cycle(6), VertexSet{0, 1, 2, 4});
  CHECK(s.graph.order() == 4);
  CHECK(s.graph.size() == 2);
  CHECK(s.to_parent == std::vector<Vertex>{0, 1, 2, 4});
  Subgraph d = delete_vertices(make_cycle(6), VertexSet{0});
  CHECK(d.graph == make_path(5));
}

TEST_CASE("parameters match brute force on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + rng() % 11;
    Graph g = random_gnp(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
    CAPTURE(oracle::show(g));
    CHECK(is_connected(g) == oracle::connected(g));
    CHECK(clique_number(g) == oracle::omega(g));
    CHECK(independence_number(g) == oracle::alpha(g));
    CHECK(is_clique(g, max_clique(g)));
    CHECK(is_independent(g, max_independent_set(g)));
    if (n <= 9) CHECK(chromatic_number(g) == oracle::chromatic(g));
    auto mis = max_independent_sets(g);
    auto expect = oracle::maximal_independent_sets(g);
    std::set<oracle::Set> got;
    for (const auto& s : mis) got.insert(s.members());
    CHECK(got == std::set<oracle::Set>(expect.begin(), expect.end()));
    auto cliques = maximum_cliques(g);
    for (const auto& c : cliques) CHECK(static_cast<int>(c.size()) == oracle::omega(g));
    for (int k = 1; k <= 4; ++k)
      CHECK(cliques_of_size(g, k).size() == oracle::copies(g, make_complete(k), false).size());
  }
}

TEST_CASE("proper colorings") {
  CHECK(chromatic_number(make_petersen()) == 3);
  CHECK(chromatic_number(cycle_power(8, 2)) == 4);
  Graph c5k2 = strong_product(make_cycle(5), make_complete(2));
  CHECK(chromatic_number(c5k2) == oracle::chromatic(c5k2));
  auto c = find_proper_coloring(make_cycle(5), 3);
  REQUIRE(c);
  CHECK(is_proper_coloring(make_cycle(5), *c));
  CHECK_FALSE(find_proper_coloring(make_cycle(5), 2));
  CHECK_FALSE(is_proper_coloring(make_path(2), {0, 0}));
  Graph k6 = make_complete(6);
  CHECK_THROWS_AS(find_proper_coloring(strong_product(make_cycle(7), k6), 17, {50}),
                  ResourceLimitError);
}

TEST_CASE("smallest-last order bounds back degree by degeneracy") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_gnp(12, 0.4, rng);
    auto order = smallest_last_order(g);
    REQUIRE(order.size() == 12u);
    std::vector<int> pos(12);
    for (int i = 0; i < 12; ++i) pos[order[i]] = i;
    // reversed order: each vertex has at most d earlier neighbours where d is the
    // largest minimum degree met while peeling
    int degeneracy = 0;
    std::vector<bool> gone(12, false);
    for (Vertex v : order) {
      int d = 0;
      for (Vertex u : g.neighbors(v))
        if (!gone[u]) ++d;
      degeneracy = std::max(degeneracy, d);
      gone[v] = true;
    }
    for (Vertex v = 0; v < 12; ++v) {
      int later = 0;
      for (Vertex u : g.neighbors(v))
        if (pos[u] > pos[v]) ++later;
      CHECK(later <= degeneracy);
    }
  }
}

TEST_CASE("blocks and Gallai trees") {
  auto b = blocks(make_path(4));
  CHECK(b.blocks.size() == 3);
  CHECK(b.cut_vertices.members() == std::vector<Vertex>{1, 2});
  CHECK(is_gallai_tree(make_complete(4)));
  CHECK(is_gallai_tree(make_cycle(5)));
  CHECK_FALSE(is_gallai_tree(make_cycle(4)));
  // bowtie: two triangles sharing a vertex
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(is_gallai_tree(bowtie));
  CHECK(blocks(bowtie).cut_vertices.members() == std::vector<Vertex>{2});
  // diamond is 2-connected but neither complete nor a cycle
  Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_gallai_tree(diamond));
  CHECK(is_gallai_forest(disjoint_union(make_cycle(3), make_path(3))));
  CHECK_FALSE(is_gallai_forest(disjoint_union(make_cycle(3), diamond)));
  CHECK(code_of([] { is_gallai_tree(make_empty(2)); }) == ErrorCode::kNotConnected);
  CHECK(blocks(make_empty(1)).blocks.size() == 1);
}

TEST_CASE("K4 clique-graph components match the catalog shapes") {
  struct Shape {
    const char* name;
    std::size_t cliques;
    std::size_t core;
  };
  for (auto s : {Shape{"CG_K4", 1, 4}, Shape{"CG_K5minus", 2, 3}, Shape{"CG_K3join3", 3, 3},
                 Shape{"CG_chain", 3, 2}}) {
    CAPTURE(s.name);
    const Graph& g = catalog_graph(s.name);
    auto comps = clique_graph_components(g, 4);
    REQUIRE(comps.size() == 1);
    auto k4s = cliques_of_size(g, 4);
    CHECK(k4s.size() == s.cliques);
    VertexSet core = k4s[0];
    for (const auto& c : k4s) core = core.intersect(c);
    CHECK(core.size() == s.core);
  }
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    Graph g = testing::random_connected(4 + rng() % 8, 0.4, rng);
    Graph h = shuffle_labels(g, rng);
    auto m = find_isomorphism(g, h);
    REQUIRE(m);
    for (const Edge& e : g.edges()) CHECK(h.adjacent((*m)[e.u], (*m)[e.v]));
    if (g.size() > 0) CHECK_FALSE(is_isomorphic(g, h.without_edge(h.edges()[0].u, h.edges()[0].v)));
  }
  CHECK(is_isomorphic(catalog_graph("H1"), cycle_power(8, 2)));
  CHECK(is_isomorphic(catalog_graph("C8sq"), cycle_power(8, 2)));
  CHECK(is_isomorphic(catalog_graph("C5xK2"), strong_product(make_cycle(5), make_complete(2))));
  CHECK_FALSE(is_isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3))));
}

TEST_CASE("vertex transitivity and automorphisms") {
  CHECK(is_vertex_transitive(make_petersen()));
  CHECK(is_vertex_transitive(cycle_power(8, 2)));
  CHECK(is_vertex_transitive(strong_product(make_cycle(7), make_complete(2))));
  CHECK_FALSE(is_vertex_transitive(make_path(3)));
  CHECK_FALSE(is_vertex_transitive(catalog_graph("H2")));
  auto a = find_automorphism(make_cycle(5), 0, 3);
  REQUIRE(a);
  CHECK((*a)[0] == 3);
  CHECK_FALSE(find_automorphism(make_path(3), 0, 1));
}

TEST_CASE("copy enumeration matches brute force") {
  std::mt19937_64 rng(19);
  std::vector<Graph> patterns{make_path(3), make_cycle(4), make_complete(3), make_cycle(5),
                              Graph(4, {{0, 1}, {0, 2}, {0, 3}})};
  for (int t = 0; t < 40; ++t) {
    Graph host = random_gnp(5 + rng() % 4, 0.5, rng);
    for (const auto& p : patterns) {
      CAPTURE(oracle::show(host));
      CAPTURE(oracle::show(p));
      CHECK(as_sets(find_copies(host, p, CopyMode::kInduced)) == oracle::copies(host, p, true));
      CHECK(as_sets(find_copies(host, p, CopyMode::kSubgraph)) == oracle::copies(host, p, false));
      CHECK(find_copy(host, p, CopyMode::kSubgraph).has_value() ==
            !oracle::copies(host, p, false).empty());
    }
  }
  // K4 is a subgraph of K5minus but not an induced... it is induced too
  CHECK(find_induced_copies(catalog_graph("K5minus"), make_complete(4)).size() == 2);
  CHECK(find_copies(catalog_graph("K5minus"), make_cycle(4), CopyMode::kInduced).empty());
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(make_complete(2)) == "A_");
  CHECK(to_graph6(make_cycle(5)) == "Dhc");
  CHECK(to_graph6(make_complete(4)) == "C~");
  CHECK(to_graph6(make_path(4)) == "Ch");
  CHECK(to_graph6(make_petersen()) == "IheA@GUAo");
  CHECK(to_graph6(make_complete(1)) == "@");
  CHECK(to_graph6(make_empty(0)) == "?");
  CHECK(from_graph6(">>graph6<<Dhc\n") == make_cycle(5));
  CHECK(to_graph6(make_complete(70)).substr(0, 4) == "~?@E");
  CHECK(from_graph6(to_graph6(make_complete(70))) == make_complete(70));
}

TEST_CASE("graph6 rejects malformed input with offsets") {
  auto offset_of = [](std::string_view s) {
    try {
      from_graph6(s, 4);
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      return static_cast<long>(e.offset());
    }
    FAIL("accepted " << s);
    return -1L;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of(":Fa@x^") == 0);   // sparse6
  CHECK(offset_of("&DI?AO?") == 0);  // digraph6
  CHECK(offset_of("D h") == 1);      // byte out of range
  CHECK(offset_of("Dh") == 2);       // truncated
  CHECK(offset_of("Dhcc") == 3);     // trailing
  CHECK(offset_of("Ai") >= 1);        // padding bits set
  CHECK(offset_of("~?@") >= 0);       // truncated long order
}

TEST_CASE("graph6 round trip on every connected graph up to 7 vertices and the catalog") {
  for (int n = 1; n <= 7; ++n)
    testing::each_connected(n, [](const Graph& g, const std::string& text) {
      CHECK(to_graph6(g) == text);
      CHECK(from_graph6(to_graph6(g)) == g);
    });
  for (const auto& e : pattern_catalog()) CHECK(from_graph6(to_graph6(e.graph)) == e.graph);
}

TEST_CASE("connected graph streams have the known counts") {
  const std::size_t counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n)
    CHECK(testing::each_connected(n, [](const Graph&, const std::string&) {}) == counts[n]);
}

TEST_CASE("edge lists") {
  Graph g = from_edge_list("# comment\n3 2\n0 1\n1 2\n");
  CHECK(g == make_path(3));
  CHECK(from_edge_list(to_edge_list(make_petersen(), "petersen")) == make_petersen());
  CHECK(to_edge_list(make_path(2), "a\nb").rfind("# a\n# b\n2 1\n", 0) == 0);
  CHECK_THROWS_AS(from_edge_list("3 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("2 1\n0 5\n"), ParseError);
  CHECK(parse_graph_text("Dhc") == make_cycle(5));
  CHECK(parse_graph_text("2 1\n0 1\n") == make_complete(2));
}

TEST_CASE("graph6 streams report bad lines and keep going") {
  std::istringstream in("A_\nbad line\n\nDhc\n");
  int graphs = 0, errors = 0;
  read_graph6_stream(
      in, [&](const Graph&, const std::string&, std::size_t) { ++graphs; },
      [&](const ParseError& e, const std::string&) {
        ++errors;
        CHECK(e.line() == 2);
      });
  CHECK(graphs == 2);
  CHECK(errors == 1);
}

TEST_CASE("random K4-free generator respects its constraints") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_k4free_graph(4 + rng() % 20, 4, 0.8, rng);
    CHECK(is_connected(g));
    CHECK(max_degree(g) <= 4);
    CHECK_FALSE(find_clique_of_size(g, 4));
  }
}

TEST_CASE("mask-based searches refuse graphs above the mask capacity") {
  CHECK(code_of([] { clique_number(make_path(300)); }) == ErrorCode::kSizeOutOfRange);
}
