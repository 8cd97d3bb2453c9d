#pragma once

// Brute-force ground truth. Observed values here come only from enumeration
// plus graph.hpp / classify.hpp; the closed forms under test are consulted
// for the expected side of each report and nowhere else.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpa/classify.hpp"
#include "lpa/error.hpp"
#include "lpa/extremal.hpp"
#include "lpa/graph.hpp"
#include "lpa/partitions.hpp"
#include "lpa/truncate.hpp"

namespace lpa::oracle {

inline constexpr std::size_t kTreeEnumerationCap = 8;
inline constexpr std::size_t kPathEnumerationCap = 20;

namespace detail {

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n < 2 || n > cap)
    throw PreconditionError(std::string(what) + " enumeration needs 2 <= n <= " + std::to_string(cap) +
                            ", got " + std::to_string(n));
}

inline const std::string& indexed_name(char prefix, std::size_t i) {
  // short names fit the small-string buffer; cache them anyway
  static thread_local std::vector<std::string> v_names, e_names;
  auto& names = prefix == 'v' ? v_names : e_names;
  while (names.size() <= i) names.push_back(std::string(1, prefix) + std::to_string(names.size() + 1));
  return names[i];
}

// Undirected edge list of the labeled tree with this Prüfer sequence.
inline std::vector<std::pair<VertexIndex, VertexIndex>> pruefer_decode(const std::vector<VertexIndex>& seq,
                                                                        std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto x : seq) ++degree[x];
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  edges.reserve(n - 1);
  for (auto x : seq) {
    VertexIndex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  VertexIndex a = n, b = n;
  for (VertexIndex v = 0; v < n; ++v) {
    if (degree[v] == 1) (a == n ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return edges;
}

inline DirectedMultigraph oriented_graph(std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& edges,
                                         std::uint64_t flip_mask) {
  DirectedMultigraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(indexed_name('v', v));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if ((flip_mask >> i) & 1u) std::swap(a, b);
    g.add_edge(indexed_name('e', i), a, b);
  }
  return g;
}

}  // namespace detail

/**
 * Visits every labeled tree on vertices v1..vn (Prüfer sequences in
 * lexicographic order) under every one of the 2^(n-1) edge orientations
 * (bit i of the mask reverses edge i). Each oriented tree is visited exactly
 * once.
 */
template <class Visit>
void for_each_oriented_tree(std::size_t n, Visit&& visit, std::size_t cap = kTreeEnumerationCap) {
  detail::require_cap(n, cap, "oriented tree");
  std::vector<VertexIndex> seq(n - 2, 0);
  while (true) {
    const auto edges = detail::pruefer_decode(seq, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
      visit(detail::oriented_graph(n, edges, mask));
    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == n - 1) seq[--i] = 0;
    if (i == 0) break;
    ++seq[i - 1];
  }
}

inline std::vector<DirectedMultigraph> enumerate_oriented_trees(std::size_t n, std::size_t cap = kTreeEnumerationCap) {
  std::vector<DirectedMultigraph> out;
  for_each_oriented_tree(n, [&](DirectedMultigraph g) { out.push_back(std::move(g)); }, cap);
  return out;
}

/// All orientations of the path v1 - v2 - ... - vn; bit i reverses edge i.
template <class Visit>
void for_each_path_orientation(std::size_t n, Visit&& visit, std::size_t cap = kPathEnumerationCap) {
  detail::require_cap(n, cap, "path orientation");
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
    visit(detail::oriented_graph(n, edges, mask));
}

inline std::vector<DirectedMultigraph> enumerate_path_orientations(std::size_t n,
                                                                   std::size_t cap = kPathEnumerationCap) {
  std::vector<DirectedMultigraph> out;
  for_each_path_orientation(n, [&](DirectedMultigraph g) { out.push_back(std::move(g)); }, cap);
  return out;
}

// True iff some vertex reaches itself along a walk of at most |V| edges,
// found by depth-bounded search from every start vertex.
inline bool has_cycle_by_search(const DirectedMultigraph& g) {
  for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
    std::vector<std::pair<VertexIndex, std::size_t>> stack{{start, 0}};
    while (!stack.empty()) {
      auto [v, depth] = stack.back();
      stack.pop_back();
      if (depth == g.vertex_count()) continue;
      for (EdgeIndex e : g.out_edges(v)) {
        const VertexIndex w = g.edge(e).dst;
        if (w == start) return true;
        stack.emplace_back(w, depth + 1);
      }
    }
  }
  return false;
}

// Literal enumeration of every path (trivial ones included), tallied by
// range vertex. Exponential; for cross-checking path_counts on small DAGs.
inline std::vector<std::uint64_t> count_paths_exhaustive(const DirectedMultigraph& g) {
  if (has_cycle_by_search(g)) throw CycleError();
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  std::vector<VertexIndex> stack;
  for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
    stack.assign(1, start);
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      ++count[v];
      for (EdgeIndex e : g.out_edges(v)) stack.push_back(g.edge(e).dst);
    }
  }
  return count;
}

/// Canonical string of a single-source tree: "(" + sorted child strings + ")".
inline std::string canonical_rooted_encoding(const DirectedMultigraph& g) {
  const auto srcs = sources(g);
  if (!is_tree(g) || srcs.size() != 1) throw PreconditionError("canonical encoding needs a single-source tree");
  auto encode = [&](auto& self, VertexIndex v) -> std::string {
    std::vector<std::string> children;
    for (EdgeIndex e : g.out_edges(v)) children.push_back(self(self, g.edge(e).dst));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
  };
  return encode(encode, srcs.front());
}

struct Extremes {
  std::uint64_t max = 0;
  std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
  DirectedMultigraph argmax;
  DirectedMultigraph argmin;
};

/// Everything the tree-based claims need, gathered in one pass over all
/// oriented labeled trees on n vertices.
struct TreeCensus {
  std::size_t n = 0;
  std::uint64_t trees = 0;
  std::map<std::uint64_t, Extremes> by_sinks;
  Extremes overall;
  // Trees whose type has kappa > n, i.e. beat the truncated tree.
  std::uint64_t kappa_violations = 0;
  std::optional<DirectedMultigraph> first_violation;
  // Single-source trees whose type has kappa == n, keyed by type.
  std::map<SemisimpleType, std::set<std::string>> minimal_realizations;
};

inline TreeCensus take_tree_census(std::size_t n, std::size_t cap = kTreeEnumerationCap) {
  TreeCensus census;
  census.n = n;
  for_each_oriented_tree(
      n,
      [&](DirectedMultigraph g) {
        ++census.trees;
        const auto type = semisimple_type(g);
        const auto dim = dimension(type);
        auto record = [&](Extremes& ex) {
          if (dim > ex.max) {
            ex.max = dim;
            ex.argmax = g;
          }
          if (dim < ex.min) {
            ex.min = dim;
            ex.argmin = g;
          }
        };
        record(census.by_sinks[type.summands()]);
        record(census.overall);
        const auto k = kappa(type);
        if (k > n) {
          if (census.kappa_violations++ == 0) census.first_violation = g;
        } else if (k == n && sources(g).size() == 1) {
          census.minimal_realizations[type].insert(canonical_rooted_encoding(g));
        }
      },
      cap);
  return census;
}

struct VerificationReport {
  std::string claim;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> s;
  std::uint64_t expected = 0;
  std::uint64_t observed = 0;
  bool pass = false;
  std::optional<DirectedMultigraph> witness_on_failure;
};

namespace detail {

inline VerificationReport make_report(std::string claim, std::uint64_t n, std::optional<std::uint64_t> s,
                                      std::uint64_t expected, std::uint64_t observed,
                                      const DirectedMultigraph* witness = nullptr) {
  VerificationReport r{std::move(claim), n, s, expected, observed, expected == observed, std::nullopt};
  if (!r.pass && witness) r.witness_on_failure = *witness;
  return r;
}

}  // namespace detail

/// Largest dimension over all trees on n vertices against the piecewise closed form.
inline VerificationReport verify_max_formula(const TreeCensus& c) {
  return detail::make_report("max", c.n, std::nullopt, max_dim(c.n).value, c.overall.max, &c.overall.argmax);
}

inline VerificationReport verify_max_fixed_sinks(const TreeCensus& c, std::uint64_t s) {
  const auto it = c.by_sinks.find(s);
  const std::uint64_t observed = it == c.by_sinks.end() ? 0 : it->second.max;
  return detail::make_report("max_s", c.n, s, max_dim_fixed_sinks(c.n, s).value, observed,
                             it == c.by_sinks.end() ? nullptr : &it->second.argmax);
}

inline VerificationReport verify_min_formula(const TreeCensus& c, std::uint64_t s) {
  const auto it = c.by_sinks.find(s);
  const std::uint64_t observed = it == c.by_sinks.end() ? 0 : it->second.min;
  return detail::make_report("min_s", c.n, s, min_dim_fixed_sinks(c.n, s).value, observed,
                             it == c.by_sinks.end() ? nullptr : &it->second.argmin);
}

inline VerificationReport verify_min_overall(const TreeCensus& c) {
  return detail::make_report("min", c.n, std::nullopt, min_dim(c.n).value, c.overall.min, &c.overall.argmin);
}

inline VerificationReport verify_truncation_minimality(const TreeCensus& c) {
  return detail::make_report("minimality", c.n, std::nullopt, 0, c.kappa_violations,
                             c.first_violation ? &*c.first_violation : nullptr);
}

// Observed: types with kappa = n whose single-source n-vertex realizations
// all share one canonical shape, that of the constructed truncated tree.
inline VerificationReport verify_uniqueness(const TreeCensus& c) {
  std::uint64_t unique = 0;
  for (const auto& [type, shapes] : c.minimal_realizations) {
    if (shapes.size() == 1 && *shapes.begin() == canonical_rooted_encoding(truncated_tree(type).graph))
      ++unique;
  }
  return detail::make_report("uniqueness", c.n, std::nullopt, truncated_tree_count(c.n), unique);
}

inline VerificationReport verify_max_formula(std::size_t n) { return verify_max_formula(take_tree_census(n)); }
inline VerificationReport verify_min_formula(std::size_t n, std::uint64_t s) {
  return verify_min_formula(take_tree_census(n), s);
}
inline VerificationReport verify_truncation_minimality(std::size_t n) {
  return verify_truncation_minimality(take_tree_census(n));
}
inline VerificationReport verify_uniqueness(std::size_t n) { return verify_uniqueness(take_tree_census(n)); }

namespace detail {

template <class Visit>
void visit_multisets(std::uint64_t count, std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& prefix,
                     Visit& visit) {
  if (count == 0) {
    visit(prefix);
    return;
  }
  for (std::uint64_t x = lo; x <= hi; ++x) {
    prefix.push_back(x);
    visit_multisets(count - 1, x, hi, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

// Observed: types with kappa = n found by listing every multiset directly
// (largest part N, then n - N further parts in [2, N]) whose constructed tree
// has n vertices and one source, reclassifies to the type, round-trips
// through its alpha code and appears in enumerate_truncated_trees(n).
inline VerificationReport verify_truncated_count(std::size_t n) {
  const auto listed = enumerate_truncated_trees(n);
  const std::set<SemisimpleType> enumerated(listed.begin(), listed.end());
  std::uint64_t observed = 0;
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t largest = 2; largest <= n; ++largest) {
    auto check = [&](const std::vector<std::uint64_t>& others) {
      auto parts = others;
      parts.push_back(largest);
      const SemisimpleType type(std::move(parts));
      const auto tree = truncated_tree(type);
      if (tree.graph.vertex_count() == n && sources(tree.graph).size() == 1 &&
          semisimple_type(tree.graph) == type && alpha_decode(alpha_encode(type)) == type &&
          enumerated.count(type))
        ++observed;
    };
    detail::visit_multisets(n - largest, 2, largest, prefix, check);
  }
  if (enumerated.size() != listed.size()) observed = 0;  // duplicates in the enumeration
  return detail::make_report("truncated_count", n, std::nullopt, truncated_tree_count(n), observed);
}

/// Distinct types over all orientations of the n-vertex path against P(n-1) - P(n-4).
inline VerificationReport verify_line_count(std::size_t n) {
  std::set<SemisimpleType> types;
  for_each_path_orientation(n, [&](const DirectedMultigraph& g) { types.insert(semisimple_type(g)); });
  const auto expected = line_algebra_count(static_cast<std::int64_t>(n)).convert_to<std::uint64_t>();
  return detail::make_report("line_count", n, std::nullopt, expected, types.size());
}

struct VerificationOptions {
  std::size_t max_tree_n = 7;
  std::size_t max_truncated_n = 12;
  std::size_t max_line_n = 14;
  std::size_t tree_cap = kTreeEnumerationCap;
};

inline std::vector<VerificationReport> run_verification_suite(const VerificationOptions& opt = {}) {
  // fail before any work rather than partway through
  if (opt.max_tree_n >= 2) detail::require_cap(opt.max_tree_n, opt.tree_cap, "oriented tree");
  if (opt.max_truncated_n >= 2) detail::require_cap(opt.max_truncated_n, kMaxTruncatedEnumeration, "truncated tree");
  if (opt.max_line_n >= 2) detail::require_cap(opt.max_line_n, kPathEnumerationCap, "path orientation");
  std::vector<VerificationReport> out;
  for (std::size_t n = 2; n <= opt.max_tree_n; ++n) {
    const auto census = take_tree_census(n, opt.tree_cap);
    if (n >= 3) {
      out.push_back(verify_max_formula(census));
      for (std::uint64_t s = 1; s <= n - 1; ++s) out.push_back(verify_max_fixed_sinks(census, s));
      out.push_back(verify_min_overall(census));
      for (std::uint64_t s = 1; s <= n - 1; ++s) out.push_back(verify_min_formula(census, s));
    }
    out.push_back(verify_truncation_minimality(census));
    out.push_back(verify_uniqueness(census));
  }
  for (std::size_t n = 2; n <= opt.max_truncated_n; ++n) out.push_back(verify_truncated_count(n));
  for (std::size_t n = 2; n <= opt.max_line_n; ++n) out.push_back(verify_line_count(n));
  return out;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

inline std::string format_report_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "claim" << std::setw(5) << "n" << std::setw(5) << "s" << std::setw(12)
      << "expected" << std::setw(12) << "observed"
      << "result\n";
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out << std::left << std::setw(16) << r.claim << std::setw(5) << r.n << std::setw(5)
        << (r.s ? std::to_string(*r.s) : std::string("-")) << std::setw(12) << r.expected << std::setw(12)
        << r.observed << (r.pass ? "PASS" : "FAIL") << "\n";
    if (r.pass) ++passed;
    if (r.witness_on_failure) {
      std::istringstream lines(serialize_graph(*r.witness_on_failure));
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  out << passed << "/" << reports.size() << " claims verified\n";
  return out.str();
}

}  // namespace lpa::oracle
