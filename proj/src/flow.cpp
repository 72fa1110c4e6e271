#include "packcert/flow.hpp"

#include <algorithm>
#include <queue>

namespace packcert {

FlowNetwork::FlowNetwork(int n) : adj_(n) {}

int FlowNetwork::add_node() {
  adj_.emplace_back();
  return num_nodes() - 1;
}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  int total = 0;
  std::vector<int> via(adj_.size());
  while (total < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> queue;
    queue.push(s);
    via[s] = -2;
    while (!queue.empty() && via[t] == -1) {
      const int u = queue.front();
      queue.pop();
      for (int a : adj_[u]) {
        const int w = arcs_[a].to;
        if (arcs_[a].residual > 0 && via[w] == -1) {
          via[w] = a;
          queue.push(w);
        }
      }
    }
    if (via[t] == -1) break;
    int push = limit - total;
    for (int w = t; w != s; w = arcs_[via[w] ^ 1].to) push = std::min(push, arcs_[via[w]].residual);
    for (int w = t; w != s; w = arcs_[via[w] ^ 1].to) {
      arcs_[via[w]].residual -= push;
      arcs_[via[w] ^ 1].residual += push;
    }
    total += push;
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(int s) const {
  std::vector<bool> seen(adj_.size(), false);
  std::queue<int> queue;
  queue.push(s);
  seen[s] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int a : adj_[u]) {
      const int w = arcs_[a].to;
      if (arcs_[a].residual > 0 && !seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
    }
  }
  return seen;
}

InCut min_in_cut(const Digraph& d, NodeId root, NodeId t) {
  const int n = d.num_nodes();
  if (root < 0 || root >= n || t < 0 || t >= n) throw InputError("min_in_cut: node out of range");
  if (root == t) throw InputError("min_in_cut: root equals target");
  FlowNetwork net(n);
  for (const Arc& a : d.arcs()) net.add_arc(a.tail, a.head, 1);
  InCut cut;
  cut.value = net.max_flow(root, t);
  const auto reach = net.source_side(root);
  for (NodeId v = 0; v < n; ++v) {
    if (!reach[v]) cut.sink_side.push_back(v);
  }
  return cut;
}

}  // namespace packcert
