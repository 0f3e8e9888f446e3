#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace orbitposet;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(Bruhat, IdentityIsMinimum) {
  for (const auto& w : enumerate_symmetric_group(4)) EXPECT_TRUE(bruhat_leq(P("1234"), w));
}

TEST(Bruhat, HandExamples) {
  EXPECT_TRUE(bruhat_leq(P("1324"), P("3412")));
  EXPECT_FALSE(bruhat_leq(P("2134"), P("1342")));
  EXPECT_THROW(bruhat_leq(P("12"), P("123")), InvalidInput);
}

TEST(Bruhat, SubwordOracleExamples) {
  EXPECT_TRUE(bruhat_leq_subword_oracle(P("1234"), P("4321")));
  EXPECT_TRUE(bruhat_leq_subword_oracle(P("3412"), P("3412")));
  EXPECT_TRUE(bruhat_leq_subword_oracle(P("1324"), P("3412")));
  EXPECT_FALSE(bruhat_leq_subword_oracle(P("2134"), P("1342")));
  EXPECT_THROW(bruhat_leq_subword_oracle(Permutation::identity(7), Permutation::longest(7)), CapacityError);
}

TEST(Bruhat, ReducedWordMultipliesBack) {
  for (const auto& w : enumerate_symmetric_group(5)) {
    const auto word = reduced_word(w);
    EXPECT_EQ(static_cast<int>(word.size()), length(w));
    Permutation x = Permutation::identity(5);
    for (int i : word) x = x.times_simple(i);
    EXPECT_EQ(x, w);
  }
}

TEST(Bruhat, AgreesWithRankMatrixCriterionOnS5) {
  const auto g = enumerate_symmetric_group(5);
  for (const auto& u : g)
    for (const auto& v : g) ASSERT_EQ(bruhat_leq(u, v), oracle::rank_matrix_leq(u, v)) << u.to_string() << " " << v.to_string();
}

TEST(Bruhat, AgreesWithSubwordOracleExhaustivelyUpToS4) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = enumerate_symmetric_group(n);
    for (const auto& u : g)
      for (const auto& v : g) EXPECT_EQ(bruhat_leq(u, v), bruhat_leq_subword_oracle(u, v));
  }
}

TEST(Bruhat, AgreesWithSubwordOracleSampledS6) {
  std::mt19937 rng(7);
  auto g = enumerate_symmetric_group(6);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int s = 0; s < 1000; ++s) {
    const auto& u = g[pick(rng)];
    const auto& v = g[pick(rng)];
    EXPECT_EQ(bruhat_leq(u, v), bruhat_leq_subword_oracle(u, v));
  }
}

TEST(Bruhat, OrderAxiomsOnS4) {
  const auto g = enumerate_symmetric_group(4);
  for (const auto& u : g) {
    EXPECT_TRUE(bruhat_leq(u, u));
    for (const auto& v : g) {
      if (u != v && bruhat_leq(u, v)) {
        EXPECT_FALSE(bruhat_leq(v, u));
        EXPECT_LT(length(u), length(v));
      }
      for (const auto& w : g)
        if (bruhat_leq(u, v) && bruhat_leq(v, w)) EXPECT_TRUE(bruhat_leq(u, w));
    }
  }
}

TEST(Bruhat, CoveringPairs) {
  EXPECT_TRUE(covering_pairs(std::vector<Permutation>{P("1234")}).empty());
  const std::vector<Permutation> s{P("1234"), P("1324"), P("3412")};
  EXPECT_EQ(covering_pairs(s), (std::vector<Cover>{{0, 1}, {1, 2}}));
  const std::vector<Permutation> chain{P("1234"), P("2134"), P("2314"), P("2341")};
  EXPECT_EQ(covering_pairs(chain).size(), 3u);
}

TEST(Bruhat, CoversInSnChangeLengthByOne) {
  const auto g = enumerate_symmetric_group(4);
  const auto poset = bruhat_poset(g);
  for (auto [a, b] : poset.covers()) EXPECT_EQ(length(poset.label(b)), length(poset.label(a)) + 1);
}

TEST(Bruhat, S3HasEightCovers) {
  const auto poset = bruhat_poset(enumerate_symmetric_group(3));
  EXPECT_EQ(poset.size(), 6);
  EXPECT_EQ(poset.covers().size(), 8u);
  EXPECT_EQ(height(poset), 3);
  EXPECT_TRUE(is_graded(poset));
  EXPECT_FALSE(is_lattice(poset));
}
