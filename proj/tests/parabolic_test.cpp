#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace orbitposet;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

CosetSystem sys_of(int n, IndexSet i, IndexSet j) { return CosetSystem(GeneratorSet(n, i), GeneratorSet(n, j)); }

CosetSystem blocks(const char* rows, const char* cols) {
  return CosetSystem::from_blocks(BlockComposition::parse(rows), BlockComposition::parse(cols));
}

}  // namespace

TEST(BlockComposition, Validation) {
  EXPECT_THROW(BlockComposition(std::vector<int>{}), InvalidInput);
  EXPECT_THROW(BlockComposition({2, 0}), InvalidInput);
  EXPECT_THROW(BlockComposition::parse("3,,3"), InvalidInput);
  EXPECT_THROW(BlockComposition::parse("x"), InvalidInput);
  EXPECT_EQ(BlockComposition::parse("3,4").n(), 7);
  EXPECT_EQ(BlockComposition::parse("2,2,3").reversed(), BlockComposition::parse("3,2,2"));
  EXPECT_EQ(BlockComposition::parse("2,2,3").block_of(5), 2);
  EXPECT_EQ(BlockComposition::parse("2,2,3").block_of(1), 0);
}

TEST(BlockComposition, ToGenerators) {
  const auto borel = blocks_to_generators(BlockComposition({1, 1, 1, 1}));
  EXPECT_TRUE(borel.indices().empty());
  EXPECT_EQ(borel.complement().indices().to_vector(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(blocks_to_generators(BlockComposition({4})).indices().to_vector(), (std::vector<int>{1, 2, 3}));
  const auto g = blocks_to_generators(BlockComposition({3, 4}));
  EXPECT_EQ(g.n(), 7);
  EXPECT_EQ(g.indices().to_vector(), (std::vector<int>{1, 2, 4, 5, 6}));
  EXPECT_EQ(g.complement().indices().to_vector(), (std::vector<int>{3}));
}

TEST(BlockComposition, RoundTripsThroughGeneratorsForAllCompositionsOf7) {
  for (std::uint64_t m = 0; m < 64; ++m) {
    const GeneratorSet g(7, IndexSet::from_mask(m << 1));
    EXPECT_EQ(blocks_to_generators(generators_to_blocks(g)).indices(), g.indices());
  }
}

TEST(CosetSystem, RejectsMismatchedTotals) {
  EXPECT_THROW(blocks("3,3", "2,2"), InvalidInput);
  EXPECT_THROW(CosetSystem(GeneratorSet(3, {}), GeneratorSet(4, {})), InvalidInput);
  EXPECT_THROW(GeneratorSet(3, IndexSet{3}), InvalidInput);
}

TEST(MinimalReps, Examples) {
  EXPECT_EQ(enumerate_minimal_reps(sys_of(4, IndexSet::full(4), IndexSet::full(4))),
            std::vector<Permutation>{Permutation::identity(4)});
  EXPECT_EQ(enumerate_minimal_reps(sys_of(4, {}, {})).size(), 24u);
  EXPECT_EQ(enumerate_minimal_reps(sys_of(4, {1, 3}, {1, 3})), (std::vector<Permutation>{P("1234"), P("1324"), P("3412")}));
}

TEST(MinimalReps, MatchBruteForceDoubleCosetMinimaUpToS5) {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t im = 0; im < subsets; ++im)
      for (std::uint64_t jm = 0; jm < subsets; jm += (n == 5 ? 3 : 1)) {
        const auto sys = sys_of(n, IndexSet::from_mask(im << 1), IndexSet::from_mask(jm << 1));
        const auto reps = enumerate_minimal_reps(sys);
        const auto expected =
            oracle::double_coset_minima(n, sys.left().indices().to_vector(), sys.right().indices().to_vector());
        EXPECT_EQ(std::set<Permutation>(reps.begin(), reps.end()), expected) << "n=" << n << " I=" << im << " J=" << jm;
      }
  }
}

TEST(CosetPoset, Examples) {
  const auto chain = coset_poset(blocks("2,2", "2,2"));
  EXPECT_EQ(chain.size(), 3);
  EXPECT_EQ(chain.covers(), (std::vector<Cover>{{0, 1}, {1, 2}}));
  EXPECT_EQ(coset_poset(blocks("5", "2,1,2")).size(), 1);
  EXPECT_EQ(coset_poset(blocks("3,3", "2,2,2")).size(), 7);
}

TEST(CosetRepresentatives, Minimal) {
  const auto sys = sys_of(4, {1, 3}, {1, 3});
  EXPECT_EQ(minimal_coset_representative(Permutation::identity(4), sys), Permutation::identity(4));
  EXPECT_EQ(minimal_coset_representative(P("1324"), sys), P("1324"));
  EXPECT_EQ(minimal_coset_representative(P("4321"), sys), P("3412"));
}

TEST(CosetRepresentatives, Maximal) {
  EXPECT_EQ(maximal_coset_representative(Permutation::identity(4), sys_of(4, IndexSet::full(4), IndexSet::full(4))),
            Permutation::longest(4));
  EXPECT_EQ(maximal_coset_representative(P("3142"), sys_of(4, {}, {})), P("3142"));
  EXPECT_EQ(maximal_coset_representative(Permutation::identity(4), sys_of(4, {1, 3}, {1, 3})), P("2143"));
}

TEST(CosetRepresentatives, MatchBruteForceOnS4) {
  for (std::uint64_t im = 0; im < 8; ++im)
    for (std::uint64_t jm = 0; jm < 8; ++jm) {
      const auto sys = sys_of(4, IndexSet::from_mask(im << 1), IndexSet::from_mask(jm << 1));
      for (const auto& x : enumerate_symmetric_group(4)) {
        const auto coset = oracle::double_coset(x, sys.left().indices().to_vector(), sys.right().indices().to_vector());
        EXPECT_EQ(minimal_coset_representative(x, sys), oracle::shortest_in(coset));
        EXPECT_EQ(maximal_coset_representative(x, sys), oracle::longest_in(coset));
      }
    }
}

TEST(ParabolicSubgroup, SizeIsProductOfFactorials) {
  EXPECT_EQ(parabolic_subgroup(blocks_to_generators(BlockComposition({2, 3}))).size(), 12u);
  EXPECT_EQ(parabolic_subgroup(GeneratorSet(4, {})).size(), 1u);
  const auto w = parabolic_subgroup(GeneratorSet(4, {1, 3}));
  EXPECT_EQ(std::set<Permutation>(w.begin(), w.end()).size(), 4u);
  const auto oracle_set = oracle::generated_subgroup(4, {1, 3});
  EXPECT_EQ(std::set<Permutation>(w.begin(), w.end()), std::set<Permutation>(oracle_set.begin(), oracle_set.end()));
}

TEST(AdditiveDecomposition, Examples) {
  const auto sys = sys_of(4, {1, 3}, {1, 3});
  const auto e = Permutation::identity(4);
  const auto d0 = verify_additive_decomposition(sys, e);
  EXPECT_EQ(d0.u, e);
  EXPECT_EQ(d0.w, e);
  EXPECT_EQ(d0.v, e);
  const auto d1 = verify_additive_decomposition(sys, P("3412"));
  EXPECT_EQ(d1.u, e);
  EXPECT_EQ(d1.w, P("3412"));
  EXPECT_EQ(d1.v, e);
  const auto d2 = verify_additive_decomposition(sys, P("4321"));
  EXPECT_EQ(d2.w, P("3412"));
  EXPECT_EQ(length(d2.u) + 4 + length(d2.v), 6);
  EXPECT_EQ(d2.u * d2.w * d2.v, P("4321"));
}

TEST(AdditiveDecomposition, UniqueForEveryElementOfS4) {
  for (std::uint64_t im = 0; im < 8; ++im)
    for (std::uint64_t jm = 0; jm < 8; ++jm) {
      const auto sys = sys_of(4, IndexSet::from_mask(im << 1), IndexSet::from_mask(jm << 1));
      for (const auto& x : enumerate_symmetric_group(4)) {
        const auto d = verify_additive_decomposition(sys, x);
        EXPECT_EQ(d.u * d.w * d.v, x);
        EXPECT_EQ(length(d.u) + length(d.w) + length(d.v), length(x));
        EXPECT_EQ(d.w, minimal_coset_representative(x, sys));
        EXPECT_TRUE(d.h.is_subset_of(sys.left().indices()));
      }
    }
}

TEST(AdditiveDecomposition, Capacity) {
  const auto sys = sys_of(8, {}, {});
  EXPECT_THROW(verify_additive_decomposition(sys, Permutation::identity(8)), CapacityError);
}

TEST(ThetaDual, Examples) {
  const auto borel = theta_dual(sys_of(5, {}, {}));
  EXPECT_TRUE(borel.left().indices().empty());
  const auto d = theta_dual(blocks("3,4", "2,2,3"));
  EXPECT_EQ(d.left_blocks(), BlockComposition::parse("4,3"));
  EXPECT_EQ(d.right_blocks(), BlockComposition::parse("3,2,2"));
  EXPECT_EQ(theta_dual(blocks("2,3,2", "7")).left_blocks(), BlockComposition::parse("2,3,2"));
}

TEST(ThetaDual, IsAnInvolutionPreservingTheCosetPoset) {
  std::mt19937 rng(11);
  for (int s = 0; s < 40; ++s) {
    const int n = 2 + s % 4;
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << (n - 1)) - 1);
    const auto sys = sys_of(n, IndexSet::from_mask(mask(rng) << 1), IndexSet::from_mask(mask(rng) << 1));
    const auto dual = theta_dual(sys);
    EXPECT_EQ(theta_dual(dual).left().indices(), sys.left().indices());
    EXPECT_EQ(theta_dual(dual).right().indices(), sys.right().indices());
    const auto a = coset_poset(sys);
    const auto b = coset_poset(dual);
    EXPECT_EQ(a.size(), b.size());
    if (a.size() <= 8) EXPECT_TRUE(oracle::brute_isomorphic(a.hasse(), b.hasse()));
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_TRUE(are_isomorphic(a, b));
  }
}
