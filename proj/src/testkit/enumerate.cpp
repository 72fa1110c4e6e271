#include "packcert/testkit/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace packcert::testkit {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const Graph& g) {
  Matrix a(g.num_nodes(), std::vector<int>(g.num_nodes(), 0));
  for (const Edge& e : g.edges()) {
    ++a[e.u][e.v];
    ++a[e.v][e.u];
  }
  return a;
}

// Colour refinement from uniform colours; colours are ranks of sorted
// signatures, so they do not depend on the labelling.
std::vector<int> refine(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> colour(n, 0);
  int classes = 1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<int> around;
      for (int w = 0; w < n; ++w) {
        if (a[v][w] > 0) around.push_back(colour[w] * 64 + a[v][w]);
      }
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (next == classes) return colour;
    classes = next;
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.num_nodes();
  const Matrix a = multiplicities(g);
  const std::vector<int> colour = refine(a);
  std::vector<NodeId> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return colour[x] < colour[y]; });
  std::vector<std::pair<int, int>> runs;  // [begin, end) of each colour class
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::string current(static_cast<std::size_t>(n * n), '\0');
  std::function<void(std::size_t)> permute = [&](std::size_t run) {
    if (run == runs.size()) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) current[i * n + j] = static_cast<char>('0' + a[order[i]][order[j]]);
      }
      if (best.empty() || current < best) best = current;
      return;
    }
    auto first = order.begin() + runs[run].first;
    auto last = order.begin() + runs[run].second;
    std::sort(first, last);
    do {
      permute(run + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  std::string prefix;
  for (int i = 0; i < n; ++i) prefix += static_cast<char>('a' + colour[order[i]] % 26);
  return std::to_string(n) + ":" + prefix + ":" + best;
}

std::vector<Graph> connected_graphs(int max_nodes, int max_edges, int max_multiplicity) {
  std::vector<Graph> out;
  if (max_nodes < 1) return out;
  std::vector<Graph> level{Graph(1)};
  out.push_back(Graph(1));
  for (int e = 1; e <= max_edges; ++e) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    auto offer = [&](Graph g) {
      if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
    };
    for (const Graph& g : level) {
      const int n = g.num_nodes();
      const Matrix a = multiplicities(g);
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
          if (a[u][v] >= max_multiplicity) continue;
          Graph h = g;
          h.add_edge(u, v);
          offer(std::move(h));
        }
      }
      if (n < max_nodes) {
        for (NodeId u = 0; u < n; ++u) {
          Graph h(n + 1, std::vector<Edge>(g.edges().begin(), g.edges().end()));
          h.add_edge(u, n);
          offer(std::move(h));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace packcert::testkit
