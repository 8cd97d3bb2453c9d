#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct EdgeRec {
  std::string name;
  VertexIndex src;
  VertexIndex dst;
};

inline bool is_token(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

/**
 * Finite directed multigraph E = (vertices, edges, src, dst).
 *
 * Vertices and edges are addressed by dense indices in declaration order;
 * names are unique tokens over [A-Za-z0-9_]. Parallel edges and self-loops
 * are representable. Every query iterates in declaration order so that all
 * derived output is deterministic.
 */
class DirectedMultigraph {
public:
  DirectedMultigraph() = default;

  VertexIndex add_vertex(std::string name) {
    if (!is_token(name)) throw PreconditionError("invalid vertex name '" + name + "'");
    auto [it, inserted] = vertex_lookup_.emplace(name, vertex_names_.size());
    if (!inserted) throw PreconditionError("duplicate vertex '" + name + "'");
    vertex_names_.push_back(std::move(name));
    out_.emplace_back();
    in_.emplace_back();
    return it->second;
  }

  EdgeIndex add_edge(std::string name, VertexIndex src, VertexIndex dst) {
    if (!is_token(name)) throw PreconditionError("invalid edge name '" + name + "'");
    if (src >= vertex_count() || dst >= vertex_count())
      throw PreconditionError("edge '" + name + "' references an unknown vertex");
    if (!edge_lookup_.emplace(name, edges_.size()).second)
      throw PreconditionError("duplicate edge '" + name + "'");
    const EdgeIndex e = edges_.size();
    edges_.push_back(EdgeRec{std::move(name), src, dst});
    out_[src].push_back(e);
    in_[dst].push_back(e);
    return e;
  }

  EdgeIndex add_edge(std::string name, std::string_view src, std::string_view dst) {
    auto s = find_vertex(src);
    if (!s) throw PreconditionError("undeclared vertex '" + std::string(src) + "'");
    auto d = find_vertex(dst);
    if (!d) throw PreconditionError("undeclared vertex '" + std::string(dst) + "'");
    return add_edge(std::move(name), *s, *d);
  }

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexIndex v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::vector<EdgeRec>& edges() const noexcept { return edges_; }
  const EdgeRec& edge(EdgeIndex e) const { return edges_.at(e); }

  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_.at(v); }
  const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_.at(v); }

  std::optional<VertexIndex> find_vertex(std::string_view name) const {
    auto it = vertex_lookup_.find(std::string(name));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }

  VertexIndex vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw PreconditionError("unknown vertex '" + std::string(name) + "'");
    return *v;
  }

  friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
    if (a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
    }
    return true;
  }

private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

// Graph documents: one declaration per line, `v NAME` or `e NAME SRC DST`,
// single-space separated, '#' comments, blank lines ignored, optional CR.
inline DirectedMultigraph parse_graph(std::string_view text) {
  DirectedMultigraph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
      // whitespace before a trailing comment is not a token separator
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
      std::size_t sp = line.find(' ', start);
      tokens.push_back(line.substr(start, sp == std::string_view::npos ? sp : sp - start));
      if (sp == std::string_view::npos) break;
      start = sp + 1;
    }
    for (auto tok : tokens)
      if (!is_token(tok))
        throw ParseError(line_no, "malformed token '" + std::string(tok) + "'");

    try {
      if (tokens[0] == "v" && tokens.size() == 2) {
        g.add_vertex(std::string(tokens[1]));
      } else if (tokens[0] == "e" && tokens.size() == 4) {
        g.add_edge(std::string(tokens[1]), tokens[2], tokens[3]);
      } else {
        throw ParseError(line_no, "expected 'v NAME' or 'e NAME SRC DST'");
      }
    } catch (const PreconditionError& err) {
      throw ParseError(line_no, err.what());
    }
  }
  return g;
}

// Inverse of parse_graph: vertex lines first, then edge lines, declaration order.
inline std::string serialize_graph(const DirectedMultigraph& g) {
  std::string out;
  for (const auto& name : g.vertex_names()) out += "v " + name + "\n";
  for (const auto& e : g.edges())
    out += "e " + e.name + " " + g.vertex_name(e.src) + " " + g.vertex_name(e.dst) + "\n";
  return out;
}

inline std::vector<VertexIndex> sinks(const DirectedMultigraph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).empty()) out.push_back(v);
  return out;
}

inline std::vector<VertexIndex> sources(const DirectedMultigraph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges(v).empty()) out.push_back(v);
  return out;
}

namespace detail {

// Kahn's algorithm, smallest ready index first. Returns a partial order if
// the graph has a cycle.
inline std::vector<VertexIndex> kahn_order(const DirectedMultigraph& g) {
  std::vector<std::size_t> indegree(g.vertex_count());
  for (const auto& e : g.edges()) ++indegree[e.dst];
  std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<VertexIndex> order;
  order.reserve(g.vertex_count());
  while (!ready.empty()) {
    VertexIndex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (EdgeIndex e : g.out_edges(v))
      if (--indegree[g.edge(e).dst] == 0) ready.push(g.edge(e).dst);
  }
  return order;
}

}  // namespace detail

inline bool is_acyclic(const DirectedMultigraph& g) {
  return detail::kahn_order(g).size() == g.vertex_count();
}

/// Every edge goes forward; ties are broken by declaration order.
inline std::vector<VertexIndex> topological_order(const DirectedMultigraph& g) {
  auto order = detail::kahn_order(g);
  if (order.size() != g.vertex_count()) throw CycleError();
  return order;
}

// A self-loop is incident once.
inline std::size_t total_degree(const DirectedMultigraph& g, VertexIndex v) {
  if (v >= g.vertex_count()) throw PreconditionError("unknown vertex index");
  std::size_t loops = 0;
  for (EdgeIndex e : g.out_edges(v))
    if (g.edge(e).dst == v) ++loops;
  return g.out_edges(v).size() + g.in_edges(v).size() - loops;
}

inline bool has_isolated_vertices(const DirectedMultigraph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (total_degree(g, v) == 0) return true;
  return false;
}

// Weak connectivity; the empty graph is not connected.
inline bool is_weakly_connected(const DirectedMultigraph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    auto visit = [&](VertexIndex w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    };
    for (EdgeIndex e : g.out_edges(v)) visit(g.edge(e).dst);
    for (EdgeIndex e : g.in_edges(v)) visit(g.edge(e).src);
  }
  return reached == g.vertex_count();
}

// Weakly connected, |E| = |V| - 1, no self-loops and no two edges on the
// same unordered vertex pair.
inline bool is_tree(const DirectedMultigraph& g) {
  if (g.vertex_count() == 0 || g.edge_count() + 1 != g.vertex_count()) return false;
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.src == e.dst) return false;
    pairs.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return false;
  return is_weakly_connected(g);
}

// Oriented lines glued at one common source.
inline bool is_bunch_tree(const DirectedMultigraph& g) {
  if (!is_tree(g)) return false;
  auto srcs = sources(g);
  if (srcs.size() != 1) return false;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (v != srcs.front() && total_degree(g, v) > 2) return false;
  return true;
}

// Connected, acyclic, total degree at most 2 everywhere, and a tree: the
// tree condition excludes a=>b and triangles with a transitive edge, which
// satisfy the degree bound without being paths.
inline bool is_line_graph(const DirectedMultigraph& g) {
  if (!is_tree(g) || !is_acyclic(g)) return false;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (total_degree(g, v) > 2) return false;
  return true;
}

inline std::string to_dot(const DirectedMultigraph& g) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const auto& name : g.vertex_names()) out << "  " << name << ";\n";
  for (const auto& e : g.edges())
    out << "  " << g.vertex_name(e.src) << " -> " << g.vertex_name(e.dst) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lpa
