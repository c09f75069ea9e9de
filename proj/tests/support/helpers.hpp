#pragma once

#include <fstream>
#include <functional>
#include <random>
#include <string>

#include "fbrooks/graph.hpp"
#include "fbrooks/io.hpp"
#include "fbrooks/rational.hpp"
#include "fbrooks/structure.hpp"

#ifndef FBROOKS_TEST_DATA
#define FBROOKS_TEST_DATA "tests/data"
#endif

namespace testing {

using fbrooks::Graph;
using fbrooks::Rational;

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

inline std::string data_path(int n) {
  return std::string(FBROOKS_TEST_DATA) + "/connected_n" + std::to_string(n) + ".g6";
}

// Calls f on every connected graph with exactly n vertices.
inline std::size_t each_connected(int n, const std::function<void(const Graph&, const std::string&)>& f) {
  std::ifstream in(data_path(n));
  if (!in) throw std::runtime_error("missing " + data_path(n));
  std::size_t count = 0;
  fbrooks::read_graph6_stream(in, [&](const Graph& g, const std::string& text, std::size_t) {
    ++count;
    f(g, text);
  });
  return count;
}

// Connected G(n, p) sample, retried until connected.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<fbrooks::Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.push_back({u, v});
    Graph g(n, e);
    if (fbrooks::is_connected(g)) return g;
  }
}

}  // namespace testing
