// Small named graphs used across the test suites.
#pragma once

#include <algorithm>
#include <vector>

#include "packcert/graph.hpp"

namespace packcert::fixtures {

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph k4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}}); }

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// Every edge of g repeated `times` times.
inline Graph repeated(const Graph& g, int times) {
  Graph out(g.num_nodes());
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < times; ++i) out.add_edge(e.u, e.v);
  }
  return out;
}

inline std::vector<NodeId> sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace packcert::fixtures
