#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lpa/error.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/**
 * Wedderburn type of a finite-dimensional Leavitt path algebra: the sorted
 * multiset [n_1 <= ... <= n_s] standing for M_{n_1}(K) + ... + M_{n_s}(K).
 * Two algebras are isomorphic exactly when their types are equal.
 */
class SemisimpleType {
public:
  SemisimpleType() = default;

  explicit SemisimpleType(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError("semisimple type needs at least one summand");
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
      throw PreconditionError("matrix sizes must be positive");
    std::sort(parts_.begin(), parts_.end());
  }

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  /// Number of simple summands (s).
  std::size_t summands() const noexcept { return parts_.size(); }
  /// Largest matrix size (N).
  std::uint64_t largest() const { return parts_.back(); }
  bool empty() const noexcept { return parts_.empty(); }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + "]";
  }

  // "2,3,3" with optional surrounding brackets.
  static SemisimpleType parse(std::string_view text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
      text = text.substr(1, text.size() - 2);
    std::vector<std::uint64_t> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
      if (item.empty() || item.size() > 18 ||
          !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw PreconditionError("malformed type '" + std::string(text) + "'");
      parts.push_back(std::stoull(std::string(item)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return SemisimpleType(std::move(parts));
  }

  friend auto operator<=>(const SemisimpleType&, const SemisimpleType&) = default;

private:
  std::vector<std::uint64_t> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const SemisimpleType& x) { return os << x.to_string(); }

/// n(v) for every vertex, indexed by VertexIndex.
class PathCountMap {
public:
  explicit PathCountMap(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::uint64_t operator[](VertexIndex v) const { return counts_.at(v); }
  std::uint64_t at(const DirectedMultigraph& g, std::string_view name) const {
    return counts_.at(g.vertex(name));
  }
  const std::vector<std::uint64_t>& values() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }

private:
  std::vector<std::uint64_t> counts_;
};

// n(v) = number of paths ending at v, the trivial one included. Uses
// n(v) = 1 + sum over in-edges e of n(src(e)) in topological order.
inline PathCountMap path_counts(const DirectedMultigraph& g) {
  std::vector<std::uint64_t> n(g.vertex_count(), 1);
  for (VertexIndex v : topological_order(g))
    for (EdgeIndex e : g.in_edges(v)) n[v] = detail::checked_add(n[v], n[g.edge(e).src]);
  return PathCountMap(std::move(n));
}

inline SemisimpleType semisimple_type(const DirectedMultigraph& g, const PathCountMap& counts) {
  std::vector<std::uint64_t> parts;
  for (VertexIndex v : sinks(g)) parts.push_back(counts[v]);
  if (parts.empty()) throw PreconditionError("graph has no vertices");
  return SemisimpleType(std::move(parts));
}

/// Type of L_K(g). Throws CycleError when g has a cycle.
inline SemisimpleType semisimple_type(const DirectedMultigraph& g) {
  return semisimple_type(g, path_counts(g));
}

inline std::uint64_t dimension(const SemisimpleType& t) {
  std::uint64_t total = 0;
  for (auto n : t.parts()) total = detail::checked_add(total, detail::checked_mul(n, n));
  return total;
}

inline bool lpa_isomorphic(const DirectedMultigraph& a, const DirectedMultigraph& b) {
  return semisimple_type(a) == semisimple_type(b);
}

inline bool has_trivial_ideal(const SemisimpleType& t) {
  return !t.empty() && t.parts().front() == 1;
}

/// kappa = s + N - 1; defined only when no summand is K itself.
inline std::uint64_t kappa(const SemisimpleType& t) {
  if (t.empty()) throw PreconditionError("empty type");
  if (has_trivial_ideal(t)) throw PreconditionError("kappa needs every matrix size >= 2, got " + t.to_string());
  return detail::checked_add(t.summands(), t.largest()) - 1;
}

struct LineRealizability {
  bool realizable = false;
  std::optional<std::uint64_t> minimal_line_vertices;
};

// Realizable by an oriented path iff no M_1 summand and at most two M_2
// summands; the path then has 1 + sum(n_i - 1) vertices.
inline LineRealizability line_realizable(const SemisimpleType& t) {
  if (t.empty() || has_trivial_ideal(t)) return {};
  auto twos = std::count(t.parts().begin(), t.parts().end(), 2u);
  if (twos > 2) return {};
  std::uint64_t vertices = 1;
  for (auto n : t.parts()) vertices = detail::checked_add(vertices, n - 1);
  return {true, vertices};
}

inline nlohmann::ordered_json to_json(const SemisimpleType& t) {
  return nlohmann::ordered_json(t.parts());
}

/// {"type":[...], "dimension":D, "sinks":[{"vertex":name,"n":k},...], "kappa":K-or-null}
inline nlohmann::ordered_json classification_json(const DirectedMultigraph& g) {
  const auto counts = path_counts(g);
  const auto type = semisimple_type(g, counts);
  nlohmann::ordered_json out;
  out["type"] = to_json(type);
  out["dimension"] = dimension(type);
  auto sink_list = nlohmann::ordered_json::array();
  for (VertexIndex v : sinks(g)) {
    nlohmann::ordered_json item;
    item["vertex"] = g.vertex_name(v);
    item["n"] = counts[v];
    sink_list.push_back(std::move(item));
  }
  out["sinks"] = std::move(sink_list);
  out["kappa"] = has_trivial_ideal(type) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(kappa(type));
  return out;
}

}  // namespace lpa
