#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "lpa/classify.hpp"
#include "lpa/truncate.hpp"
#include "test_support.hpp"

using namespace lpa;

namespace {

SemisimpleType type_of(std::vector<std::uint64_t> parts) { return SemisimpleType(std::move(parts)); }

std::vector<std::string> edge_lines(const DirectedMultigraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) out.push_back(g.vertex_name(e.src) + "->" + g.vertex_name(e.dst));
  return out;
}

// Every multiset with parts in [2, max_part] and at most max_summands parts.
std::vector<SemisimpleType> small_types(std::uint64_t max_part, std::size_t max_summands) {
  std::vector<SemisimpleType> out;
  std::vector<std::uint64_t> prefix;
  auto rec = [&](auto& self, std::uint64_t lo) -> void {
    if (!prefix.empty()) out.emplace_back(prefix);
    if (prefix.size() == max_summands) return;
    for (std::uint64_t x = lo; x <= max_part; ++x) {
      prefix.push_back(x);
      self(self, x);
      prefix.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace

TEST(TruncatedTree, Examples) {
  auto three = truncated_tree(type_of({3}));
  EXPECT_EQ(three.graph.vertex_names(), (std::vector<std::string>{"u1", "u2", "u3"}));
  EXPECT_EQ(edge_lines(three.graph), (std::vector<std::string>{"u1->u2", "u2->u3"}));

  auto two_three = truncated_tree(type_of({2, 3}));
  EXPECT_EQ(two_three.graph.vertex_names(), (std::vector<std::string>{"u1", "u2", "u3", "w1"}));
  EXPECT_EQ(edge_lines(two_three.graph), (std::vector<std::string>{"u1->u2", "u2->u3", "u1->w1"}));
  EXPECT_EQ(two_three.graph.edge(2).name, "f1");

  auto two = truncated_tree(type_of({2}));
  EXPECT_EQ(edge_lines(two.graph), (std::vector<std::string>{"u1->u2"}));
}

TEST(TruncatedTree, Preconditions) {
  EXPECT_THROW(truncated_tree(type_of({1, 3})), PreconditionError);
  EXPECT_THROW(truncated_tree(SemisimpleType{}), PreconditionError);
  EXPECT_THROW(alpha_encode(type_of({1})), PreconditionError);
}

TEST(TruncatedTree, ReclassifiesToItsType) {
  const auto types = small_types(6, 5);
  EXPECT_EQ(types.size(), 251u);  // C(5+5, 5) - 1 multisets
  for (const auto& t : types) {
    const auto tree = truncated_tree(t);
    EXPECT_EQ(semisimple_type(tree.graph), t);
    EXPECT_EQ(tree.graph.vertex_count(), kappa(t));
    EXPECT_EQ(sources(tree.graph).size(), 1u);
    EXPECT_TRUE(is_tree(tree.graph));
    EXPECT_EQ(sinks(tree.graph).size(), t.summands());
  }
}

TEST(DValues, Examples) {
  EXPECT_EQ(d_values(lpa::testing::graph_of("v a\nv b\nv c\ne x a b\ne y b c")),
            (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(d_values(truncated_tree(type_of({2, 3})).graph), (std::vector<std::uint64_t>{1, 3, 4, 3}));
  EXPECT_EQ(d_values(lpa::testing::graph_of("v a")), (std::vector<std::uint64_t>{1}));
}

TEST(DValues, InjectiveOnNonSinksOfTruncatedTrees) {
  for (const auto& t : small_types(6, 5)) {
    const auto tree = truncated_tree(t);
    const auto d = d_values(tree.graph);
    std::set<std::uint64_t> seen;
    for (VertexIndex v = 0; v < tree.graph.vertex_count(); ++v)
      if (!tree.graph.out_edges(v).empty()) {
        EXPECT_TRUE(seen.insert(d[v]).second) << t.to_string();
      }
  }
}

TEST(Alpha, EncodeExamples) {
  EXPECT_EQ(alpha_encode(type_of({3})).to_string(), "110");
  EXPECT_EQ(alpha_encode(type_of({2, 3})).to_string(), "1010");
  EXPECT_EQ(alpha_encode(type_of({2, 2})).to_string(), "100");
}

TEST(Alpha, DecodeExamples) {
  EXPECT_EQ(alpha_decode(AlphaCode::parse("110")), type_of({3}));
  EXPECT_EQ(alpha_decode(AlphaCode::parse("1010")), type_of({2, 3}));
  EXPECT_EQ(alpha_decode(AlphaCode::parse("1000")), type_of({2, 2, 2}));
}

TEST(Alpha, MalformedCodes) {
  EXPECT_THROW(AlphaCode::parse("0110"), PreconditionError);
  EXPECT_THROW(AlphaCode::parse("1011"), PreconditionError);
  EXPECT_THROW(AlphaCode::parse("1"), PreconditionError);
  EXPECT_THROW(AlphaCode::parse("1a0"), PreconditionError);
}

TEST(Alpha, CodeShapeMatchesType) {
  for (const auto& t : small_types(6, 5)) {
    const auto code = alpha_encode(t);
    EXPECT_EQ(code.size(), kappa(t));
    const auto ones = std::count(code.bits().begin(), code.bits().end(), true);
    EXPECT_EQ(static_cast<std::uint64_t>(ones), t.largest() - 1);
    EXPECT_EQ(code.size() - ones, t.summands());
  }
}

TEST(Alpha, RoundTripsBothWays) {
  for (std::size_t n = 2; n <= 14; ++n) {
    const auto types = enumerate_truncated_trees(n);
    for (std::size_t mask = 0; mask < types.size(); ++mask) {
      std::string text = "1";
      for (std::size_t i = 0; i < n - 2; ++i) text += ((mask >> (n - 3 - i)) & 1u) ? '1' : '0';
      text += '0';
      const auto code = AlphaCode::parse(text);
      EXPECT_EQ(alpha_encode(alpha_decode(code)), code);
      EXPECT_EQ(alpha_decode(alpha_encode(types[mask])), types[mask]);
      EXPECT_EQ(kappa(types[mask]), n);
    }
  }
}

TEST(EnumerateTruncated, Examples) {
  EXPECT_EQ(enumerate_truncated_trees(2), (std::vector<SemisimpleType>{type_of({2})}));
  EXPECT_EQ(enumerate_truncated_trees(3), (std::vector<SemisimpleType>{type_of({2, 2}), type_of({3})}));
  EXPECT_EQ(enumerate_truncated_trees(4), (std::vector<SemisimpleType>{type_of({2, 2, 2}), type_of({2, 3}),
                                                                       type_of({3, 3}), type_of({4})}));
  EXPECT_THROW(enumerate_truncated_trees(1), PreconditionError);
  EXPECT_EQ(truncated_tree_count(12), 1024u);
}

// The decode rule is checked against the encode direction: the set of
// types with kappa = n listed directly as multisets must equal the decoded
// code set.
TEST(EnumerateTruncated, MatchesDirectMultisetListing) {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::set<SemisimpleType> direct;
    for (const auto& t : small_types(n, n))
      if (kappa(t) == n) direct.insert(t);
    const auto listed = enumerate_truncated_trees(n);
    const std::set<SemisimpleType> decoded(listed.begin(), listed.end());
    EXPECT_EQ(decoded.size(), listed.size());
    EXPECT_EQ(decoded, direct) << "n = " << n;
    EXPECT_EQ(listed.size(), std::size_t{1} << (n - 2));
  }
}
