#include "fbrooks/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "fbrooks/error.hpp"

namespace fbrooks {

Vertex CatalogEntry::vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<Vertex>(i);
  throw Error(ErrorCode::kNotFound,
              "no vertex \"" + std::string(label) + "\" in " + name);
}

namespace {

// "a b c" labels, "a-b b-c" edges
CatalogEntry from_labels(std::string name, std::string_view labels,
                         std::string_view edges, std::string note) {
  CatalogEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  std::istringstream ls{std::string(labels)};
  for (std::string l; ls >> l;) e.labels.push_back(l);
  std::vector<Edge> list;
  std::istringstream es{std::string(edges)};
  for (std::string tok; es >> tok;) {
    auto dash = tok.find('-');
    list.push_back({e.vertex(tok.substr(0, dash)), e.vertex(tok.substr(dash + 1))});
  }
  e.graph = Graph(static_cast<int>(e.labels.size()), list);
  return e;
}

CatalogEntry from_graph(std::string name, Graph g, std::string note) {
  CatalogEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  for (Vertex v = 0; v < g.order(); ++v) e.labels.push_back(std::to_string(v));
  e.graph = std::move(g);
  return e;
}

// Shared part of H1..H9: x joined to a,b,c,d and the triangle y,z,w.
constexpr std::string_view kRooted = "x a b c d y z w";
constexpr std::string_view kRootedBase = "x-a x-b x-c x-d y-z z-w y-w ";
// neighbourhood of x is the path a-c-d-b; pairing {a,d}, {b,c}
constexpr std::string_view kPathNbhd = "a-c c-d d-b ";
// neighbourhood of x is two disjoint edges ab, cd
constexpr std::string_view kMatchNbhd = "a-b c-d ";

std::string cat(std::string_view a, std::string_view b, std::string_view c) {
  return std::string(a) + std::string(b) + std::string(c);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  c.push_back(from_labels("K5minus", "0 1 2 3 4",
                          "0-1 0-2 0-3 0-4 1-2 1-3 1-4 2-3 2-4",
                          "K5 with the edge 3-4 removed"));
  c.push_back(from_labels(
      "G0", "x s1 s2 u v p q w r",
      "x-s1 x-s2 s1-s2 s1-u s1-v s1-p s1-q s2-u s2-v s2-p s2-q u-v u-w v-w p-q p-r q-r w-r",
      "H10 with {a,c} contracted to s1 and {b,d} to s2"));

  const std::string bad_triple_note =
      "x with neighbourhood {a,b,c,d}, triangle y,z,w; contracting the two pairs "
      "of the pairing turns the triangle into a K5-";
  c.push_back(from_labels("H1", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-y a-z b-w b-y c-z d-w"),
                          bad_triple_note + "; isomorphic to C8^2"));
  c.push_back(from_labels("H2", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-w a-z b-w b-z c-y d-y"),
                          bad_triple_note + "; 4-regular, 11:3-colorable"));
  c.push_back(from_labels("H3", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-w a-z b-w c-y d-y"),
                          bad_triple_note + "; H2 minus the edge bz"));
  c.push_back(from_labels("H4", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-y a-z b-y b-w d-w"),
                          bad_triple_note + "; c and z have degree 3"));
  c.push_back(from_labels("H5", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-w a-z b-w b-z d-y"),
                          bad_triple_note + "; H2 minus the edge cy"));
  c.push_back(from_labels("H6", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-y a-z b-w c-y d-w"),
                          bad_triple_note + "; isomorphic to H4"));
  c.push_back(from_labels("H1minus", kRooted,
                          cat(kRootedBase, kPathNbhd, "a-y a-z b-y c-z d-w"),
                          bad_triple_note +
                              "; seventh path-neighbourhood configuration, C8^2 minus an edge"));
  c.push_back(from_labels("H7", kRooted,
                          cat(kRootedBase, kMatchNbhd, "a-y a-z b-w b-y c-w c-z"),
                          bad_triple_note + "; d is the only vertex of degree below 4"));
  c.push_back(from_labels("H8", kRooted,
                          cat(kRootedBase, kMatchNbhd, "a-y a-z b-y c-w c-z d-w"),
                          bad_triple_note + "; isomorphic to H4"));
  c.push_back(from_labels("H9", kRooted,
                          cat(kRootedBase, kMatchNbhd, "a-y a-z b-y c-w d-w"),
                          bad_triple_note + "; b, c, d, z have degree 3"));
  c.push_back(from_labels(
      "H10", "x a b c d u v p q w r",
      "x-a x-b x-c x-d a-b c-d u-a u-b v-c v-d p-a p-b q-c q-d u-v u-w v-w p-q p-r q-r w-r",
      "neighbourhood of x is ab, cd; triangles uvw and pqr joined by wr; "
      "11:3-colorable"));

  c.push_back(from_labels("G2+uv", "x a b c d y z w u v",
                          cat(kRootedBase, kPathNbhd, "a-y a-z b-y b-w d-w u-c v-z u-v"),
                          "H4 with u~c, v~z, plus the edge uv"));
  c.push_back(from_labels("G2/uv", "x a b c d y z w uv",
                          cat(kRootedBase, kPathNbhd, "a-y a-z b-y b-w d-w uv-c uv-z"),
                          "H4 with u~c, v~z, u and v identified"));
  c.push_back(from_labels("G4", "x a d y w bcz",
                          "a-bcz a-x a-y bcz-d bcz-w bcz-x bcz-y d-w d-x w-y",
                          "H9 with {b,c,z} contracted"));
  c.push_back(from_labels("G5", "x a c y w bdz",
                          "a-bdz a-x a-y bdz-c bdz-w bdz-x bdz-y c-w c-x w-y",
                          "H9 with {b,d,z} contracted"));
  c.push_back(from_labels(
      "G6", "x a c d y w bz u v p",
      "a-bz a-x a-y bz-w bz-x bz-y c-d c-w c-x d-w d-x w-y u-v v-p u-p p-c p-d u-bz v-bz",
      "H9 with {b,z} contracted, plus a triangle u,v,p with p~c, p~d, u~bz, v~bz"));

  c.push_back(from_graph("C5xK2", [] {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 5; ++j)
          for (int b = 0; b < 2; ++b) {
            int u = 2 * i + a, v = 2 * j + b;
            bool near = i == j || (i + 1) % 5 == j || (j + 1) % 5 == i;
            if (u < v && near) e.push_back({u, v});
          }
    return Graph(10, e);
  }(), "strong product of C5 and K2, vertex 2i+j is (i,j)"));
  c.push_back(from_labels("C8sq", "u0 u1 u2 u3 u4 u5 u6 u7",
                          "u0-u1 u1-u2 u2-u3 u3-u4 u4-u5 u5-u6 u6-u7 u7-u0 "
                          "u0-u2 u1-u3 u2-u4 u3-u5 u4-u6 u5-u7 u6-u0 u7-u1",
                          "square of the 8-cycle"));

  // component shapes of the K4 clique graph when the maximum degree is 5
  c.push_back(from_labels("CG_K4", "0 1 2 3", "0-1 0-2 0-3 1-2 1-3 2-3",
                          "single K4; core = all four vertices"));
  c.push_back(from_labels("CG_K5minus", "0 1 2 3 4",
                          "0-1 0-2 1-2 0-3 1-3 2-3 0-4 1-4 2-4",
                          "two K4 sharing the triangle 0,1,2; core = the triangle"));
  c.push_back(from_labels("CG_K3join3", "0 1 2 3 4 5",
                          "0-1 0-2 1-2 0-3 1-3 2-3 0-4 1-4 2-4 0-5 1-5 2-5",
                          "three K4 sharing the triangle 0,1,2; core = the triangle"));
  c.push_back(from_labels("CG_chain", "0 1 2 3 4 5",
                          "0-1 0-2 0-3 1-2 1-3 2-3 0-4 1-4 2-4 0-5 1-5 4-5",
                          "K4s {0,1,2,3}, {0,1,2,4}, {0,1,4,5}; core = {0,1}"));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& pattern_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : pattern_catalog()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : pattern_catalog())
    if (e.name == name) return e;
  std::string keys;
  for (const auto& n : catalog_names()) keys += (keys.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::kNotFound,
              "unknown catalog name \"" + std::string(name) + "\"; available: " + keys);
}

const Graph& catalog_graph(std::string_view name) { return catalog_entry(name).graph; }

}  // namespace fbrooks
