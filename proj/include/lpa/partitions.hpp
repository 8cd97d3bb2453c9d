#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpa/classify.hpp"
#include "lpa/error.hpp"

namespace lpa {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kDefaultPartitionCap = 1000;

/**
 * Memoized partition numbers P(0..cap), built once by the part-bounded
 * recurrence (add parts of size 1, then 2, ... to a running table).
 * P(0) = 1 and P(m) = 0 for m < 0.
 */
class PartitionTable {
public:
  explicit PartitionTable(std::int64_t cap = kDefaultPartitionCap) : memo_(static_cast<std::size_t>(cap) + 1) {
    if (cap < 0) throw PreconditionError("partition table cap must be >= 0");
    memo_[0] = 1;
    for (std::int64_t part = 1; part <= cap; ++part)
      for (std::int64_t m = part; m <= cap; ++m) memo_[m] += memo_[m - part];
  }

  std::int64_t cap() const noexcept { return static_cast<std::int64_t>(memo_.size()) - 1; }

  const BigInt& operator()(std::int64_t m) const {
    static const BigInt zero = 0;
    if (m < 0) return zero;
    if (m > cap()) throw PreconditionError("partition table holds P(m) only for m <= " + std::to_string(cap()));
    return memo_[static_cast<std::size_t>(m)];
  }

private:
  std::vector<BigInt> memo_;
};

inline const PartitionTable& default_partition_table() {
  static const PartitionTable table;
  return table;
}

inline BigInt partition_count(std::int64_t m) { return default_partition_table()(m); }

/// Isomorphism classes of Leavitt path algebras of n-vertex line graphs: P(n-1) - P(n-4).
inline BigInt line_algebra_count(std::int64_t n, const PartitionTable& table = default_partition_table()) {
  if (n < 2) throw PreconditionError("line graphs need n >= 2");
  return table(n - 1) - table(n - 4);
}

inline constexpr std::int64_t kMaxLineTypeEnumeration = 70;

namespace detail {

// Partitions of `remaining` into parts <= `bound`, as nonincreasing
// sequences in ascending lexicographic order.
template <class Visit>
void visit_partitions(std::uint64_t remaining, std::uint64_t bound, std::vector<std::uint64_t>& prefix, Visit& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (std::uint64_t part = 1; part <= std::min(remaining, bound); ++part) {
    prefix.push_back(part);
    visit_partitions(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

// Edges of an n-vertex line graph grouped by the sink they point toward: a
// partition of n-1 with at most two parts equal to 1, and a part of size k
// is a sink with n = k + 1. Order follows the partitions written in
// nonincreasing form, ascending lexicographically.
inline std::vector<SemisimpleType> enumerate_line_types(std::int64_t n) {
  if (n < 2) throw PreconditionError("line graphs need n >= 2");
  if (n > kMaxLineTypeEnumeration)
    throw PreconditionError("line type enumeration capped at n = " + std::to_string(kMaxLineTypeEnumeration));
  std::vector<SemisimpleType> out;
  std::vector<std::uint64_t> prefix;
  auto collect = [&](const std::vector<std::uint64_t>& partition) {
    if (std::count(partition.begin(), partition.end(), 1u) > 2) return;
    std::vector<std::uint64_t> parts;
    for (auto k : partition) parts.push_back(k + 1);
    out.emplace_back(std::move(parts));
  };
  const auto m = static_cast<std::uint64_t>(n - 1);
  detail::visit_partitions(m, m, prefix, collect);
  return out;
}

}  // namespace lpa
