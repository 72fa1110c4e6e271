// Plain-text instance formats. Whitespace separated, 0-indexed, `#` starts a
// comment that runs to the end of the line.
//
//   graph n m        then m lines  u v
//   digraph n m      then m lines  tail head
//   hypergraph n m   then m lines  s v1 ... vs
//   dypergraph n m   then m lines  s head v1 ... v(s-1)
//   mixed n p q      then p arc lines, then q edge lines
#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "packcert/graph.hpp"
#include "packcert/hypergraph.hpp"

namespace packcert::io {

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

using Instance = std::variant<Graph, Digraph, Hypergraph, Dypergraph, MixedGraph>;

Instance parse_instance(std::string_view text);
Graph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);
Hypergraph parse_hypergraph(std::string_view text);
Dypergraph parse_dypergraph(std::string_view text);
MixedGraph parse_mixed(std::string_view text);

std::string format(const Graph& g);
std::string format(const Digraph& d);
std::string format(const Hypergraph& h);
std::string format(const Dypergraph& d);
std::string format(const MixedGraph& m);
std::string format(const Instance& instance);

/// Whole file as a string; "-" reads standard input. Throws ParseError when
/// the file cannot be opened.
std::string read_text(const std::string& path);

}  // namespace packcert::io
