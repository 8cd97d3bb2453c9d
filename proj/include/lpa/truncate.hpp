#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/classify.hpp"
#include "lpa/error.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/**
 * Bit-vector code of a truncated tree on n vertices.
 *
 * Vertices are ranked by d(u) = #{v : n(v) <= n(u)}; the code has a 1 at
 * d(u) for every non-sink u and 0 elsewhere. It always starts with 1 (the
 * source) and ends with 0 (the longest sink), and every such string is the
 * code of exactly one truncated tree.
 */
class AlphaCode {
public:
  explicit AlphaCode(std::vector<bool> bits) : bits_(std::move(bits)) {
    if (bits_.size() < 2) throw PreconditionError("alpha code needs length >= 2");
    if (!bits_.front()) throw PreconditionError("alpha code must start with 1");
    if (bits_.back()) throw PreconditionError("alpha code must end with 0");
  }

  static AlphaCode parse(std::string_view text) {
    std::vector<bool> bits;
    for (char c : text) {
      if (c != '0' && c != '1') throw PreconditionError("alpha code must be a 0/1 string, got '" + std::string(text) + "'");
      bits.push_back(c == '1');
    }
    return AlphaCode(std::move(bits));
  }

  const std::vector<bool>& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }

  std::string to_string() const {
    std::string out;
    for (bool b : bits_) out += b ? '1' : '0';
    return out;
  }

  friend auto operator<=>(const AlphaCode&, const AlphaCode&) = default;

private:
  std::vector<bool> bits_;
};

inline std::ostream& operator<<(std::ostream& os, const AlphaCode& x) { return os << x.to_string(); }

/// Canonical single-source tree of a type: spine u1..uN, leaves w1..w{s-1}.
struct TruncatedTree {
  DirectedMultigraph graph;
  std::vector<VertexIndex> spine;
  std::vector<VertexIndex> leaves;
};

inline void require_no_trivial_ideal(const SemisimpleType& t) {
  if (t.empty()) throw PreconditionError("empty type");
  if (has_trivial_ideal(t))
    throw PreconditionError("no truncated tree for a type with a summand M_1(K): " + t.to_string());
}

inline constexpr std::uint64_t kMaxTreeVertices = std::uint64_t{1} << 22;

// Spine u1 -> u2 -> ... -> uN realizes the largest summand; every other
// summand n_i hangs as a leaf w_i off u_{n_i - 1}, so n(w_i) = n_i.

inline TruncatedTree truncated_tree(const SemisimpleType& t) {
  require_no_trivial_ideal(t);
  if (kappa(t) > kMaxTreeVertices)
    throw PreconditionError("truncated tree would exceed " + std::to_string(kMaxTreeVertices) + " vertices");
  TruncatedTree out;
  const std::uint64_t spine_len = t.largest();
  for (std::uint64_t i = 1; i <= spine_len; ++i)
    out.spine.push_back(out.graph.add_vertex("u" + std::to_string(i)));
  for (std::size_t i = 1; i < t.summands(); ++i)
    out.leaves.push_back(out.graph.add_vertex("w" + std::to_string(i)));
  for (std::uint64_t i = 1; i < spine_len; ++i)
    out.graph.add_edge("e" + std::to_string(i), out.spine[i - 1], out.spine[i]);
  for (std::size_t i = 1; i < t.summands(); ++i)
    out.graph.add_edge("f" + std::to_string(i), out.spine[t.parts()[i - 1] - 2], out.leaves[i - 1]);
  return out;
}

/// d(u) = number of vertices v with n(v) <= n(u), indexed by VertexIndex.
inline std::vector<std::uint64_t> d_values(const DirectedMultigraph& g) {
  const auto counts = path_counts(g);
  auto sorted = counts.values();
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint64_t> d;
  d.reserve(g.vertex_count());
  for (auto n : counts.values())
    d.push_back(static_cast<std::uint64_t>(std::upper_bound(sorted.begin(), sorted.end(), n) - sorted.begin()));
  return d;
}

inline AlphaCode alpha_encode(const SemisimpleType& t) {
  const auto tree = truncated_tree(t);
  const auto d = d_values(tree.graph);
  std::vector<bool> bits(tree.graph.vertex_count(), false);
  for (VertexIndex v = 0; v < tree.graph.vertex_count(); ++v)
    if (!tree.graph.out_edges(v).empty()) bits[d[v] - 1] = true;
  return AlphaCode(std::move(bits));
}

// Each 0 stands for a sink whose matrix size is one more than the number
// of 1s before it.
inline SemisimpleType alpha_decode(const AlphaCode& c) {
  std::vector<std::uint64_t> parts;
  std::uint64_t ones = 0;
  for (bool bit : c.bits()) {
    if (bit)
      ++ones;
    else
      parts.push_back(ones + 1);
  }
  return SemisimpleType(std::move(parts));
}

inline constexpr std::size_t kMaxTruncatedEnumeration = 24;

/// Number of truncated trees on n vertices: one per code 1??..?0, so 2^(n-2).
inline std::uint64_t truncated_tree_count(std::size_t n) {
  if (n < 2 || n > 65) throw PreconditionError("truncated tree count needs 2 <= n <= 65");
  return std::uint64_t{1} << (n - 2);
}

// All 2^(n-2) types with kappa = n, ordered by their codes read as binary
// numbers.
inline std::vector<SemisimpleType> enumerate_truncated_trees(std::size_t n) {
  if (n < 2) throw PreconditionError("truncated trees need n >= 2");
  if (n > kMaxTruncatedEnumeration)
    throw PreconditionError("enumeration capped at n = " + std::to_string(kMaxTruncatedEnumeration));
  const std::size_t free_bits = n - 2;
  std::vector<SemisimpleType> out;
  out.reserve(std::size_t{1} << free_bits);
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits); ++mask) {
    std::vector<bool> bits(n, false);
    bits.front() = true;
    for (std::size_t i = 0; i < free_bits; ++i) bits[1 + i] = (mask >> (free_bits - 1 - i)) & 1u;
    out.push_back(alpha_decode(AlphaCode(std::move(bits))));
  }
  return out;
}

}  // namespace lpa
