// Random instances built by constructive characterizations, so every output
// has the target property by construction. Loops may appear while building
// (a pinched loop becomes two parallel edges) and are dropped from the result.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packcert/graph.hpp"

namespace packcert::testkit {

inline constexpr const char* kPrngName = "mt19937_64";

/// The operations applied, one letter per step ("A", "B", "C").
struct GeneratedGraph {
  Graph graph;
  std::string script;
};

struct GeneratedDigraph {
  Digraph digraph;
  NodeId root = 0;
  std::string script;
};

/// 2k-edge-connected: (A) add an edge or loop, (B) pinch k existing edges
/// with a new node.
GeneratedGraph gen_pinch_2k(std::uint64_t seed, int steps, int k);

/// Rooted k-arc-connected from root 0: (A) add an arc or loop, (B) new node
/// with k entering arcs, (C) pinch j in 1..k arcs and add k-j entering arcs.
GeneratedDigraph gen_mader(std::uint64_t seed, int steps, int k);

/// (k,l)-partition-connected, 0 <= l < k: (A) add an edge or loop,
/// (B) pinch j in l..k edges and add k-j edges at the new node.
GeneratedGraph gen_kl_pinch(std::uint64_t seed, int steps, int k, int l);

/// Rooted (k,l)-arc-connected from root 0, 0 <= l < k: (A) add an arc or
/// loop, (B) pinch j in l..k-1 arcs and add k-j arcs entering the new node.
GeneratedDigraph gen_kv(std::uint64_t seed, int steps, int k, int l);

}  // namespace packcert::testkit
