#include "packcert/testkit/generators.hpp"

#include <algorithm>
#include <random>

namespace packcert::testkit {

namespace {

struct Pair {
  NodeId a;
  NodeId b;  // head for arcs
};

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : rng_(seed) {}

  int draw(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }
  NodeId any_node() { return draw(nodes_); }

  void add(NodeId a, NodeId b) { pairs_.push_back({a, b}); }

  /// Replaces j distinct existing pairs a-b by a-z, z-b for a new node z.
  NodeId pinch(int j) {
    std::vector<int> order(pairs_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (int i = 0; i < j; ++i) std::swap(order[i], order[i + draw(static_cast<int>(order.size()) - i)]);
    const NodeId z = nodes_++;
    std::vector<int> chosen(order.begin(), order.begin() + j);
    std::sort(chosen.rbegin(), chosen.rend());
    for (int i : chosen) {
      const Pair p = pairs_[i];
      pairs_.erase(pairs_.begin() + i);
      add(p.a, z);
      add(z, p.b);
    }
    return z;
  }

  NodeId new_node() { return nodes_++; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }

  Graph graph() const {
    Graph g(nodes_);
    for (const Pair& p : pairs_) {
      if (p.a != p.b) g.add_edge(p.a, p.b);
    }
    return g;
  }

  Digraph digraph() const {
    Digraph d(nodes_);
    for (const Pair& p : pairs_) {
      if (p.a != p.b) d.add_arc(p.a, p.b);
    }
    return d;
  }

 private:
  std::mt19937_64 rng_;
  int nodes_ = 1;
  std::vector<Pair> pairs_;
};

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

GeneratedGraph gen_pinch_2k(std::uint64_t seed, int steps, int k) {
  require(k >= 1 && steps >= 0, "gen_pinch_2k: need k >= 1, steps >= 0");
  Builder b(seed);
  std::string script;
  for (int step = 0; step < steps; ++step) {
    if (b.num_pairs() >= k && b.draw(2) == 1) {
      b.pinch(k);
      script += 'B';
    } else {
      b.add(b.any_node(), b.any_node());
      script += 'A';
    }
  }
  return {b.graph(), script};
}

GeneratedDigraph gen_mader(std::uint64_t seed, int steps, int k) {
  require(k >= 1 && steps >= 0, "gen_mader: need k >= 1, steps >= 0");
  Builder b(seed);
  std::string script;
  for (int step = 0; step < steps; ++step) {
    const int op = b.draw(3);
    if (op == 1) {
      const NodeId z = b.new_node();
      for (int i = 0; i < k; ++i) b.add(b.draw(z), z);
      script += 'B';
    } else if (op == 2 && b.num_pairs() >= 1) {
      const int j = 1 + b.draw(std::min(k, b.num_pairs()));
      const NodeId z = b.pinch(j);
      for (int i = j; i < k; ++i) b.add(b.draw(z), z);
      script += 'C';
    } else {
      b.add(b.any_node(), b.any_node());
      script += 'A';
    }
  }
  return {b.digraph(), 0, script};
}

GeneratedGraph gen_kl_pinch(std::uint64_t seed, int steps, int k, int l) {
  require(0 <= l && l < k && steps >= 0, "gen_kl_pinch: need 0 <= l < k, steps >= 0");
  Builder b(seed);
  std::string script;
  for (int step = 0; step < steps; ++step) {
    if (b.num_pairs() >= l && b.draw(2) == 1) {
      const int j = l + b.draw(std::min(k, b.num_pairs()) - l + 1);
      const NodeId z = b.pinch(j);
      for (int i = j; i < k; ++i) b.add(b.draw(z), z);
      script += 'B';
    } else {
      b.add(b.any_node(), b.any_node());
      script += 'A';
    }
  }
  return {b.graph(), script};
}

GeneratedDigraph gen_kv(std::uint64_t seed, int steps, int k, int l) {
  require(0 <= l && l < k && steps >= 0, "gen_kv: need 0 <= l < k, steps >= 0");
  Builder b(seed);
  std::string script;
  for (int step = 0; step < steps; ++step) {
    if (b.num_pairs() >= l && b.draw(2) == 1) {
      const int j = l + b.draw(std::min(k - 1, b.num_pairs()) - l + 1);
      const NodeId z = b.pinch(j);
      for (int i = j; i < k; ++i) b.add(b.draw(z), z);
      script += 'B';
    } else {
      b.add(b.any_node(), b.any_node());
      script += 'A';
    }
  }
  return {b.digraph(), 0, script};
}

}  // namespace packcert::testkit
