#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lpa/classify.hpp"
#include "lpa/error.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/**
 * Branch lengths (t_1 <= ... <= t_s) of a bunch tree: s oriented lines glued
 * at a common source. Branch i has t_i vertices besides the source, so the
 * tree has 1 + sum(t_i) vertices and its i-th sink has n = t_i + 1.
 */
class BunchTuple {
public:
  BunchTuple() = default;

  explicit BunchTuple(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError("bunch tuple needs at least one branch");
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
      throw PreconditionError("bunch tuple branches must have length >= 1");
    std::sort(parts_.begin(), parts_.end());
  }

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::uint64_t spread() const { return parts_.back() - parts_.front(); }

  /// Vertex count of the bunch tree: 1 + sum(t_i).
  std::uint64_t vertices() const {
    std::uint64_t n = 1;
    for (auto t : parts_) n = detail::checked_add(n, t);
    return n;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const BunchTuple&, const BunchTuple&) = default;

private:
  std::vector<std::uint64_t> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const BunchTuple& x) { return os << x.to_string(); }

struct ExtremalReport {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> s;  // absent for the optimum over all sink counts
  std::uint64_t value = 0;
  DirectedMultigraph witness;
  std::optional<std::uint64_t> optimal_s;
};

inline constexpr std::uint64_t kMaxWitnessVertices = std::uint64_t{1} << 22;

namespace detail {

inline void require_sink_range(std::uint64_t n, std::uint64_t s) {
  if (n < 2 || s < 1 || s > n - 1)
    throw PreconditionError("need 1 <= s <= n - 1, got n = " + std::to_string(n) + ", s = " + std::to_string(s));
  if (n > kMaxWitnessVertices) throw PreconditionError("n too large for a witness graph");
}

inline void require_vertex_count(std::uint64_t n) {
  if (n < 2) throw PreconditionError("need n >= 2, got " + std::to_string(n));
  if (n > kMaxWitnessVertices) throw PreconditionError("n too large for a witness graph");
}

}  // namespace detail

/// Source "r", branch i made of b{i}_1 -> ... -> b{i}_{t_i}.
inline DirectedMultigraph bunch_tree(const BunchTuple& t) {
  DirectedMultigraph g;
  const VertexIndex root = g.add_vertex("r");
  for (std::size_t i = 0; i < t.size(); ++i) {
    VertexIndex prev = root;
    for (std::uint64_t j = 1; j <= t.parts()[i]; ++j) {
      const std::string suffix = std::to_string(i + 1) + "_" + std::to_string(j);
      VertexIndex v = g.add_vertex("b" + suffix);
      g.add_edge("e" + suffix, prev, v);
      prev = v;
    }
  }
  return g;
}

// Spine p1 -> ... -> p_{n-s} with s leaves w1..ws hanging off the last spine
// vertex; every sink then has n = n - s + 1.
inline DirectedMultigraph fan_tree(std::uint64_t n, std::uint64_t s) {
  detail::require_sink_range(n, s);
  DirectedMultigraph g;
  const std::uint64_t spine = n - s;
  for (std::uint64_t i = 1; i <= spine; ++i) g.add_vertex("p" + std::to_string(i));
  for (std::uint64_t i = 1; i <= s; ++i) g.add_vertex("w" + std::to_string(i));
  for (std::uint64_t i = 1; i < spine; ++i) g.add_edge("e" + std::to_string(i), i - 1, i);
  for (std::uint64_t i = 1; i <= s; ++i) g.add_edge("f" + std::to_string(i), spine - 1, spine + i - 1);
  return g;
}

/// s(n - s + 1)^2
inline std::uint64_t max_dim_value(std::uint64_t n, std::uint64_t s) {
  const std::uint64_t side = n - s + 1;
  return detail::checked_mul(s, detail::checked_mul(side, side));
}

inline ExtremalReport max_dim_fixed_sinks(std::uint64_t n, std::uint64_t s) {
  detail::require_sink_range(n, s);
  return ExtremalReport{n, s, max_dim_value(n, s), fan_tree(n, s), std::nullopt};
}

/// Sink count maximizing s(n - s + 1)^2, by residue of n mod 3.
inline std::uint64_t max_dim_optimal_sinks(std::uint64_t n) {
  switch (n % 3) {
    case 0: return n / 3;
    case 1: return (n + 2) / 3;
    default: return (n + 1) / 3;
  }
}

// Closed form of the maximum over trees on n vertices. Each numerator is
// divisible by 27.
inline std::uint64_t max_dim_closed_form(std::uint64_t n) {
  using detail::checked_mul;
  switch (n % 3) {
    case 0: {
      const std::uint64_t k = 2 * n + 3;
      return checked_mul(n / 3, checked_mul(k, k)) / 9;
    }
    case 1: {
      const std::uint64_t k = 2 * n + 1;
      return checked_mul((n + 2) / 3, checked_mul(k, k)) / 9;
    }
    default: {
      const std::uint64_t k = (n + 1) / 3;
      return checked_mul(4, checked_mul(k, checked_mul(k, k)));
    }
  }
}

// Integer stand-in for the calculus argument: s(n-s+1)^2 is unimodal with
// its real maximum at (n+1)/3, so compare the two neighbouring integers.
inline std::uint64_t max_dim_by_bracketing(std::uint64_t n) {
  const std::uint64_t lo = std::max<std::uint64_t>(1, (n + 1) / 3);
  const std::uint64_t hi = std::min<std::uint64_t>(n - 1, (n + 3) / 3);
  return std::max(max_dim_value(n, lo), max_dim_value(n, hi));
}

inline ExtremalReport max_dim(std::uint64_t n) {
  detail::require_vertex_count(n);
  const std::uint64_t s = max_dim_optimal_sinks(n);
  const std::uint64_t value = max_dim_closed_form(n);
  if (value != max_dim_value(n, s) || value != max_dim_by_bracketing(n))
    throw Error("maximum-dimension closed form disagrees with bracketing at n = " + std::to_string(n));
  return ExtremalReport{n, std::nullopt, value, fan_tree(n, s), s};
}

/// Most balanced tuple: n-1 = qs + r gives s-r branches of q and r of q+1.
inline BunchTuple balanced_tuple(std::uint64_t n, std::uint64_t s) {
  detail::require_sink_range(n, s);
  const std::uint64_t q = (n - 1) / s;
  const std::uint64_t r = (n - 1) % s;
  std::vector<std::uint64_t> parts(s - r, q);
  parts.insert(parts.end(), r, q + 1);
  return BunchTuple(std::move(parts));
}

/// r(q+2)^2 + (s-r)(q+1)^2 where n-1 = qs + r, 0 <= r < s.
inline std::uint64_t min_dim_value(std::uint64_t n, std::uint64_t s) {
  using detail::checked_add;
  using detail::checked_mul;
  const std::uint64_t q = (n - 1) / s;
  const std::uint64_t r = (n - 1) % s;
  return checked_add(checked_mul(r, checked_mul(q + 2, q + 2)), checked_mul(s - r, checked_mul(q + 1, q + 1)));
}

inline ExtremalReport min_dim_fixed_sinks(std::uint64_t n, std::uint64_t s) {
  detail::require_sink_range(n, s);
  return ExtremalReport{n, s, min_dim_value(n, s), bunch_tree(balanced_tuple(n, s)), std::nullopt};
}

// Attained by the star: n-1 sinks, each M_2(K).
inline ExtremalReport min_dim(std::uint64_t n) {
  detail::require_vertex_count(n);
  const std::uint64_t value = detail::checked_mul(4, n - 1);
  return ExtremalReport{n, std::nullopt, value, bunch_tree(balanced_tuple(n, n - 1)), n - 1};
}

/// Sum of (t_i + 1)^2: the dimension of L_K of the bunch tree.
inline std::uint64_t bunch_tuple_dimension(const BunchTuple& t) {
  std::uint64_t total = 0;
  for (auto x : t.parts()) total = detail::checked_add(total, detail::checked_mul(x + 1, x + 1));
  return total;
}

// Move one vertex from the longest branch to the shortest. The dimension
// drops by exactly 2(t_s - t_1) - 2.
inline BunchTuple rebalance_step(const BunchTuple& t) {
  if (t.size() == 0 || t.spread() <= 1)
    throw PreconditionError("tuple " + t.to_string() + " is already balanced");
  auto parts = t.parts();
  parts.front() += 1;
  parts.back() -= 1;
  return BunchTuple(std::move(parts));
}

/**
 * Bunch tuple (m_1..m_s) dominated by an arbitrary tree g with n vertices.
 *
 * With n_i = n(v_i) - 1 over the sinks in nondecreasing order, the excess
 * beta = sum(n_i) - (n - 1) is removed from the shortest branches first,
 * never dropping a branch below 1. The result sums to n - 1, satisfies
 * 1 <= m_i <= n_i, and so its bunch tree has dimension at most that of g.
 */
inline BunchTuple dominating_bunch_tuple(const DirectedMultigraph& g) {
  if (!is_tree(g) || g.vertex_count() < 2)
    throw PreconditionError("dominating bunch tuple needs a tree with at least 2 vertices");
  const auto counts = path_counts(g);
  std::vector<std::uint64_t> lengths;
  for (VertexIndex v : sinks(g)) lengths.push_back(counts[v] - 1);
  std::sort(lengths.begin(), lengths.end());

  std::uint64_t total = 0;
  for (auto x : lengths) total = detail::checked_add(total, x);
  const std::uint64_t edges = g.vertex_count() - 1;
  if (total < edges) throw Error("sink path lengths cover fewer than n - 1 edges");
  std::uint64_t beta = total - edges;

  // k = first index where the cumulative slack sum(n_i - 1) reaches beta;
  // k = 0 is the case n_1 - 1 >= beta.
  std::vector<std::uint64_t> m = lengths;
  std::size_t k = 0;
  while (beta > m[k] - 1) {
    beta -= m[k] - 1;
    m[k] = 1;
    ++k;
  }
  m[k] -= beta;
  return BunchTuple(std::move(m));
}

}  // namespace lpa
