// Exhaustive lists of small connected (multi)graphs, one per isomorphism
// class.
#pragma once

#include <string>
#include <vector>

#include "packcert/graph.hpp"

namespace packcert::testkit {

/// Canonical string of a multigraph; equal exactly for isomorphic graphs.
std::string canonical_form(const Graph& g);

/// Connected loopless graphs with 1 <= n <= max_nodes, at most max_edges
/// edges and at most max_multiplicity parallel copies of any edge.
std::vector<Graph> connected_graphs(int max_nodes, int max_edges, int max_multiplicity = 1);

}  // namespace packcert::testkit
