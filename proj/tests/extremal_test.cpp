#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "lpa/classify.hpp"
#include "lpa/extremal.hpp"
#include "lpa/oracle.hpp"
#include "test_support.hpp"

using namespace lpa;

namespace {

// Max / min of sum over sinks of n(v)^2 over every oriented labeled tree on n
// vertices, keyed by sink count. Computed by an independent literal path
// enumeration over Prüfer sequences x orientations (n = 3..7) and frozen.
const std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> kBruteMax = {
    {3, {{1, 9}, {2, 8}}},
    {4, {{1, 16}, {2, 18}, {3, 12}}},
    {5, {{1, 25}, {2, 32}, {3, 27}, {4, 16}}},
    {6, {{1, 36}, {2, 50}, {3, 48}, {4, 36}, {5, 20}}},
    {7, {{1, 49}, {2, 72}, {3, 75}, {4, 64}, {5, 45}, {6, 24}}},
};
const std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> kBruteMin = {
    {3, {{1, 9}, {2, 8}}},
    {4, {{1, 16}, {2, 13}, {3, 12}}},
    {5, {{1, 25}, {2, 18}, {3, 17}, {4, 16}}},
    {6, {{1, 36}, {2, 25}, {3, 22}, {4, 21}, {5, 20}}},
    {7, {{1, 49}, {2, 32}, {3, 27}, {4, 26}, {5, 25}, {6, 24}}},
};

std::uint64_t witness_dimension(const ExtremalReport& r) { return dimension(semisimple_type(r.witness)); }

// All nondecreasing tuples of positive integers summing to total.
std::vector<BunchTuple> all_tuples(std::uint64_t total) {
  std::vector<BunchTuple> out;
  std::vector<std::uint64_t> prefix;
  auto rec = [&](auto& self, std::uint64_t remaining, std::uint64_t lo) -> void {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (std::uint64_t x = lo; x <= remaining; ++x) {
      prefix.push_back(x);
      self(self, remaining - x, x);
      prefix.pop_back();
    }
  };
  rec(rec, total, 1);
  return out;
}

}  // namespace

TEST(MaxFixedSinks, Examples) {
  EXPECT_EQ(max_dim_fixed_sinks(6, 2).value, 50u);
  const auto line = max_dim_fixed_sinks(9, 1);
  EXPECT_EQ(line.value, 81u);
  EXPECT_TRUE(is_line_graph(line.witness));
  EXPECT_EQ(max_dim_fixed_sinks(6, 5).value, 20u);
  EXPECT_EQ(semisimple_type(max_dim_fixed_sinks(7, 3).witness), SemisimpleType({5, 5, 5}));
  EXPECT_THROW(max_dim_fixed_sinks(6, 6), PreconditionError);
  EXPECT_THROW(max_dim_fixed_sinks(6, 0), PreconditionError);
}

TEST(MaxDim, Examples) {
  const auto six = max_dim(6);
  EXPECT_EQ(six.value, 50u);
  EXPECT_EQ(six.optimal_s, 2u);
  EXPECT_EQ(semisimple_type(six.witness), SemisimpleType({5, 5}));
  const auto five = max_dim(5);
  EXPECT_EQ(five.value, 32u);
  EXPECT_EQ(semisimple_type(five.witness), SemisimpleType({4, 4}));
  const auto seven = max_dim(7);
  EXPECT_EQ(seven.value, 75u);
  EXPECT_EQ(seven.optimal_s, 3u);
  EXPECT_EQ(semisimple_type(seven.witness), SemisimpleType({5, 5, 5}));
  EXPECT_THROW(max_dim(1), PreconditionError);
}

TEST(MinFixedSinks, Examples) {
  EXPECT_EQ(min_dim_fixed_sinks(7, 3).value, 27u);
  EXPECT_EQ(min_dim_fixed_sinks(6, 2).value, 25u);
  EXPECT_EQ(min_dim_fixed_sinks(5, 4).value, 16u);
  EXPECT_TRUE(is_bunch_tree(min_dim_fixed_sinks(6, 2).witness));
  EXPECT_EQ(balanced_tuple(6, 2), BunchTuple({2, 3}));
  EXPECT_THROW(min_dim_fixed_sinks(5, 5), PreconditionError);
}

TEST(MinDim, Examples) {
  EXPECT_EQ(min_dim(5).value, 16u);
  EXPECT_EQ(min_dim(2).value, 4u);
  EXPECT_EQ(semisimple_type(min_dim(2).witness), SemisimpleType({2}));
  EXPECT_EQ(min_dim(7).value, 24u);
  for (std::uint64_t s = 1; s < 6; ++s) EXPECT_LT(min_dim(7).value, min_dim_fixed_sinks(7, s).value);
  EXPECT_EQ(semisimple_type(min_dim(5).witness), SemisimpleType({2, 2, 2, 2}));
}

TEST(Extremal, FormulasMatchSinkSweep) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    std::uint64_t best_max = 0, best_min = ~std::uint64_t{0};
    for (std::uint64_t s = 1; s <= n - 1; ++s) {
      best_max = std::max(best_max, max_dim_fixed_sinks(n, s).value);
      best_min = std::min(best_min, min_dim_fixed_sinks(n, s).value);
    }
    EXPECT_EQ(max_dim(n).value, best_max) << n;
    EXPECT_EQ(max_dim_closed_form(n), best_max) << n;
    EXPECT_EQ(max_dim_by_bracketing(n), best_max) << n;
    EXPECT_EQ(min_dim(n).value, best_min) << n;
  }
}

TEST(Extremal, WitnessesClassifyToTheirValue) {
  for (std::uint64_t n = 2; n <= 25; ++n) {
    EXPECT_EQ(witness_dimension(max_dim(n)), max_dim(n).value);
    EXPECT_EQ(witness_dimension(min_dim(n)), min_dim(n).value);
    for (std::uint64_t s = 1; s <= n - 1; ++s) {
      const auto hi = max_dim_fixed_sinks(n, s);
      const auto lo = min_dim_fixed_sinks(n, s);
      EXPECT_EQ(witness_dimension(hi), hi.value);
      EXPECT_EQ(witness_dimension(lo), lo.value);
      EXPECT_EQ(hi.witness.vertex_count(), n);
      EXPECT_EQ(lo.witness.vertex_count(), n);
      EXPECT_TRUE(is_tree(hi.witness));
      EXPECT_TRUE(is_bunch_tree(lo.witness));
      EXPECT_EQ(sinks(hi.witness).size(), s);
      EXPECT_EQ(sinks(lo.witness).size(), s);
    }
  }
}

TEST(Extremal, UnimodalInSinkCount) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (std::uint64_t s = 1; s + 1 <= n - 1; ++s) {
      const auto here = max_dim_value(n, s), next = max_dim_value(n, s + 1);
      if (3 * (s + 1) <= n + 1) {
        EXPECT_LE(here, next) << n << " " << s;
      }
      if (3 * s >= n + 1) {
        EXPECT_GE(here, next) << n << " " << s;
      }
    }
  }
}

TEST(Extremal, FrozenBruteForceTable) {
  for (const auto& [n, row] : kBruteMax)
    for (const auto& [s, value] : row) EXPECT_EQ(max_dim_fixed_sinks(n, s).value, value) << n << "," << s;
  for (const auto& [n, row] : kBruteMin)
    for (const auto& [s, value] : row) EXPECT_EQ(min_dim_fixed_sinks(n, s).value, value) << n << "," << s;
}

TEST(Extremal, OracleCensusMatchesFrozenTable) {
  for (std::uint64_t n = 3; n <= 6; ++n) {
    const auto census = oracle::take_tree_census(n);
    for (const auto& [s, value] : kBruteMax.at(n)) EXPECT_EQ(census.by_sinks.at(s).max, value);
    for (const auto& [s, value] : kBruteMin.at(n)) EXPECT_EQ(census.by_sinks.at(s).min, value);
  }
}

TEST(BunchTuple, Dimension) {
  EXPECT_EQ(bunch_tuple_dimension(BunchTuple({1, 1})), 8u);
  EXPECT_EQ(bunch_tuple_dimension(BunchTuple({2, 2, 2})), 27u);
  EXPECT_EQ(bunch_tuple_dimension(BunchTuple({1, 3})), 20u);
  EXPECT_EQ(bunch_tuple_dimension(BunchTuple({1, 3})), dimension(semisimple_type(bunch_tree(BunchTuple({1, 3})))));
  EXPECT_THROW(BunchTuple({0, 2}), PreconditionError);
}

TEST(Rebalance, Examples) {
  const auto a = rebalance_step(BunchTuple({1, 1, 4}));
  EXPECT_EQ(a, BunchTuple({1, 2, 3}));
  EXPECT_EQ(bunch_tuple_dimension(BunchTuple({1, 1, 4})), 33u);
  EXPECT_EQ(bunch_tuple_dimension(a), 29u);
  const auto b = rebalance_step(BunchTuple({1, 3}));
  EXPECT_EQ(b, BunchTuple({2, 2}));
  EXPECT_EQ(bunch_tuple_dimension(b), 18u);
  EXPECT_THROW(rebalance_step(BunchTuple({2, 2, 2})), PreconditionError);
}

TEST(Rebalance, DescendsToBalancedWitness) {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    for (auto t : all_tuples(n - 1)) {
      const auto s = t.size();
      std::size_t steps = 0;
      while (t.spread() > 1) {
        const auto next = rebalance_step(t);
        EXPECT_EQ(bunch_tuple_dimension(t) - bunch_tuple_dimension(next), 2 * t.spread() - 2);
        EXPECT_LT(bunch_tuple_dimension(next), bunch_tuple_dimension(t));
        t = next;
        ASSERT_LT(++steps, 1000u);
      }
      EXPECT_EQ(t, balanced_tuple(n, s));
      EXPECT_EQ(bunch_tuple_dimension(t), min_dim_fixed_sinks(n, s).value);
    }
  }
}

TEST(DominatingTuple, Examples) {
  using lpa::testing::graph_of;
  EXPECT_EQ(dominating_bunch_tuple(bunch_tree(BunchTuple({1, 2}))), BunchTuple({1, 2}));

  auto g = graph_of("v a\nv b\nv c\nv w\ne x a b\ne y b c\ne z b w");
  EXPECT_EQ(dominating_bunch_tuple(g), BunchTuple({1, 2}));
  EXPECT_EQ(bunch_tuple_dimension(BunchTuple({1, 2})), 13u);
  EXPECT_EQ(dimension(semisimple_type(g)), 18u);

  auto star = graph_of("v c\nv a\nv b\nv d\ne x c a\ne y c b\ne z c d");
  EXPECT_EQ(dominating_bunch_tuple(star), BunchTuple({1, 1, 1}));

  EXPECT_THROW(dominating_bunch_tuple(graph_of("v a\nv b\ne x a b\ne y a b")), PreconditionError);
}

// Over every oriented tree with up to 6 vertices: the tuple sums to n - 1,
// is bounded by the sink path lengths, and its bunch tree is no larger.
TEST(DominatingTuple, BoundsEveryTree) {
  for (std::size_t n = 2; n <= 6; ++n) {
    oracle::for_each_oriented_tree(n, [&](const DirectedMultigraph& g) {
      const auto m = dominating_bunch_tuple(g);
      const auto type = semisimple_type(g);
      ASSERT_EQ(m.size(), type.summands());
      EXPECT_EQ(m.vertices(), n);
      for (std::size_t i = 0; i < m.size(); ++i) EXPECT_LE(m.parts()[i], type.parts()[i] - 1);
      EXPECT_LE(bunch_tuple_dimension(m), dimension(type));
      EXPECT_GE(bunch_tuple_dimension(m), min_dim_fixed_sinks(n, m.size()).value);
    });
  }
}
