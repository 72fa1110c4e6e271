#include "packcert/io/formats.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace packcert::io {

namespace {

class Tokens {
 public:
  explicit Tokens(std::string_view text) {
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
        items_.push_back({std::string(text.substr(i, j - i)), line});
        i = j;
      }
    }
  }

  std::string word() {
    if (pos_ >= items_.size()) throw ParseError("parse: unexpected end of input");
    return items_[pos_++].text;
  }

  int number() {
    if (pos_ >= items_.size()) throw ParseError("parse: unexpected end of input");
    const auto& item = items_[pos_++];
    int value = 0;
    const char* first = item.text.data();
    const char* last = first + item.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0) {
      throw ParseError("parse: line " + std::to_string(item.line) + ": expected a non-negative integer, got '" +
                       item.text + "'");
    }
    return value;
  }

  void finish() const {
    if (pos_ < items_.size()) {
      throw ParseError("parse: line " + std::to_string(items_[pos_].line) + ": trailing token '" +
                       items_[pos_].text + "'");
    }
  }

 private:
  struct Item {
    std::string text;
    std::size_t line;
  };
  std::vector<Item> items_;
  std::size_t pos_ = 0;
};

void expect_header(Tokens& in, const char* keyword) {
  const std::string word = in.word();
  if (word != keyword) throw ParseError(std::string("parse: expected header '") + keyword + "', got '" + word + "'");
}

// Library constructors report bad ids and loops as InputError; surface them
// as parse errors.
template <class F>
auto guarded(F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("parse: ") + e.what());
  }
}

Graph read_graph_body(Tokens& in) {
  const int n = in.number();
  const int m = in.number();
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    const int u = in.number();
    const int v = in.number();
    g.add_edge(u, v);
  }
  return g;
}

Digraph read_digraph_body(Tokens& in, int n, int m) {
  Digraph d(n);
  for (int i = 0; i < m; ++i) {
    const int tail = in.number();
    const int head = in.number();
    d.add_arc(tail, head);
  }
  return d;
}

Hypergraph read_hypergraph_body(Tokens& in) {
  const int n = in.number();
  const int m = in.number();
  Hypergraph h(n);
  for (int i = 0; i < m; ++i) {
    const int s = in.number();
    std::vector<NodeId> nodes(s);
    for (int& v : nodes) v = in.number();
    h.add_hyperedge(std::move(nodes));
  }
  return h;
}

Dypergraph read_dypergraph_body(Tokens& in) {
  const int n = in.number();
  const int m = in.number();
  Dypergraph d(n);
  for (int i = 0; i < m; ++i) {
    const int s = in.number();
    if (s < 1) throw ParseError("parse: dyperedge with no members");
    const NodeId head = in.number();
    std::vector<NodeId> nodes{head};
    for (int j = 1; j < s; ++j) nodes.push_back(in.number());
    d.add_dyperedge(std::move(nodes), head);
  }
  return d;
}

MixedGraph read_mixed_body(Tokens& in) {
  const int n = in.number();
  const int p = in.number();
  const int q = in.number();
  Digraph arcs = read_digraph_body(in, n, p);
  Graph edges(n);
  for (int i = 0; i < q; ++i) {
    const int u = in.number();
    const int v = in.number();
    edges.add_edge(u, v);
  }
  return MixedGraph(std::move(arcs), std::move(edges));
}

template <class T, class Body>
T parse_as(std::string_view text, const char* keyword, Body body) {
  return guarded([&] {
    Tokens in(text);
    expect_header(in, keyword);
    T value = body(in);
    in.finish();
    return value;
  });
}

}  // namespace

Graph parse_graph(std::string_view text) { return parse_as<Graph>(text, "graph", read_graph_body); }

Digraph parse_digraph(std::string_view text) {
  return parse_as<Digraph>(text, "digraph", [](Tokens& in) {
    const int n = in.number();
    const int m = in.number();
    return read_digraph_body(in, n, m);
  });
}

Hypergraph parse_hypergraph(std::string_view text) {
  return parse_as<Hypergraph>(text, "hypergraph", read_hypergraph_body);
}

Dypergraph parse_dypergraph(std::string_view text) {
  return parse_as<Dypergraph>(text, "dypergraph", read_dypergraph_body);
}

MixedGraph parse_mixed(std::string_view text) { return parse_as<MixedGraph>(text, "mixed", read_mixed_body); }

Instance parse_instance(std::string_view text) {
  Tokens probe(text);
  const std::string keyword = probe.word();
  if (keyword == "graph") return parse_graph(text);
  if (keyword == "digraph") return parse_digraph(text);
  if (keyword == "hypergraph") return parse_hypergraph(text);
  if (keyword == "dypergraph") return parse_dypergraph(text);
  if (keyword == "mixed") return parse_mixed(text);
  throw ParseError("parse: unknown header '" + keyword + "'");
}

std::string format(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.num_nodes() << ' ' << d.num_arcs() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string format(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.num_nodes() << ' ' << h.num_hyperedges() << '\n';
  for (const auto& z : h.hyperedges()) {
    out << z.size();
    for (NodeId v : z) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string format(const Dypergraph& d) {
  std::ostringstream out;
  out << "dypergraph " << d.num_nodes() << ' ' << d.num_dyperedges() << '\n';
  for (const Dyperedge& e : d.dyperedges()) {
    out << e.nodes.size() << ' ' << e.head;
    for (NodeId v : e.nodes) {
      if (v != e.head) out << ' ' << v;
    }
    out << '\n';
  }
  return out.str();
}

std::string format(const MixedGraph& m) {
  std::ostringstream out;
  out << "mixed " << m.num_nodes() << ' ' << m.arcs.num_arcs() << ' ' << m.edges.num_edges() << '\n';
  for (const Arc& a : m.arcs.arcs()) out << a.tail << ' ' << a.head << '\n';
  for (const Edge& e : m.edges.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format(const Instance& instance) {
  return std::visit([](const auto& x) { return format(x); }, instance);
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace packcert::io
