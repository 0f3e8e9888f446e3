#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace orbitposet;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
BlockComposition B(const char* s) { return BlockComposition::parse(s); }
OrbitMatrix M(std::vector<std::vector<int>> e) { return OrbitMatrix::from_entries(e); }

}  // namespace

TEST(OrbitMatrix, Validation) {
  EXPECT_THROW(OrbitMatrix(B("2,2"), B("2,2"), {{2, 0}, {0, 1}}), InvalidInput);
  EXPECT_THROW(OrbitMatrix(B("2,2"), B("2,2"), {{3, -1}, {-1, 3}}), InvalidInput);
  EXPECT_THROW(OrbitMatrix(B("2,2"), B("2,2"), {{2, 0}}), InvalidInput);
  EXPECT_THROW(M({{1, 1}, {1}}), InvalidInput);
  EXPECT_EQ(M({{1, 2}, {0, 3}}).row_margins(), B("3,3"));
  EXPECT_EQ(M({{1, 2}, {0, 3}}).col_margins(), B("1,5"));
}

TEST(OrbitMatrix, CosetToMatrix) {
  const auto sys = CosetSystem::from_blocks(B("2,2"), B("2,2"));
  EXPECT_EQ(coset_to_matrix(P("1234"), sys), M({{2, 0}, {0, 2}}));
  EXPECT_EQ(coset_to_matrix(P("3412"), sys), M({{0, 2}, {2, 0}}));
  EXPECT_EQ(coset_to_matrix(P("1324"), sys), M({{1, 1}, {1, 1}}));
  EXPECT_THROW(coset_to_matrix(P("2134"), sys), InvalidInput);
}

TEST(OrbitMatrix, MatrixToMinRep) {
  EXPECT_EQ(matrix_to_min_rep(M({{2, 0}, {0, 2}})), P("1234"));
  EXPECT_EQ(matrix_to_min_rep(M({{0, 2}, {2, 0}})), P("3412"));
  EXPECT_EQ(matrix_to_min_rep(M({{1, 1}, {1, 1}})), P("1324"));
}

TEST(OrbitMatrix, BijectionRoundTrips) {
  std::mt19937 rng(3);
  for (const char* rows : {"3,3", "2,3,1", "1,1,4", "2,2,2"})
    for (const char* cols : {"2,2,2", "4,2", "1,2,1,2", "6"}) {
      const auto sys = CosetSystem::from_blocks(B(rows), B(cols));
      for (const auto& w : enumerate_minimal_reps(sys)) {
        const auto m = coset_to_matrix(w, sys);
        EXPECT_EQ(matrix_to_min_rep(m), w);
      }
      for (const auto& m : enumerate_margin_matrices(B(rows), B(cols))) {
        const auto w = matrix_to_min_rep(m);
        EXPECT_TRUE(is_minimal_rep(w, sys));
        EXPECT_EQ(coset_to_matrix(w, sys), m);
      }
    }
}

TEST(OrbitMatrix, DominanceExamples) {
  const auto a = M({{2, 0}, {0, 2}});
  const auto b = M({{1, 1}, {1, 1}});
  const auto c = M({{0, 2}, {2, 0}});
  EXPECT_TRUE(matrix_leq(a, a));
  EXPECT_TRUE(matrix_leq(a, b));
  EXPECT_FALSE(matrix_leq(c, a));
  EXPECT_THROW(matrix_leq(a, M({{3, 1}, {0, 0}})), InvalidInput);
}

TEST(OrbitMatrix, MarginEnumerationCounts) {
  EXPECT_EQ(enumerate_margin_matrices(B("2,2"), B("1,1,1,1")).size(), 6u);
  EXPECT_EQ(enumerate_margin_matrices(B("3,3"), B("2,2,2")).size(), 7u);
  EXPECT_EQ(enumerate_margin_matrices(B("5"), B("5")).size(), 1u);
  EXPECT_EQ(enumerate_margin_matrices(B("3,6"), B("3,3,3")).size(), 10u);
  EXPECT_THROW(enumerate_margin_matrices(B("3"), B("2")), InvalidInput);
}

TEST(OrbitMatrix, FirstEnumeratedMatrixIsTheMinimum) {
  const auto mats = enumerate_margin_matrices(B("2,3,2"), B("3,1,3"));
  for (const auto& m : mats) EXPECT_TRUE(matrix_leq(mats.front(), m));
}

TEST(OrbitMatrix, MarginEnumerationMatchesBruteForceOverSn) {
  std::mt19937 rng(5);
  for (int s = 0; s < 60; ++s) {
    const int n = 1 + s % 7;
    std::vector<int> rows{1}, cols{1};
    std::bernoulli_distribution cut(0.5);
    for (int i = 1; i < n; ++i) {
      if (cut(rng)) rows.push_back(1); else ++rows.back();
      if (cut(rng)) cols.push_back(1); else ++cols.back();
    }
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& m : enumerate_margin_matrices(BlockComposition(rows), BlockComposition(cols))) {
      EXPECT_TRUE(got.insert(m.grid()).second);
    }
    EXPECT_EQ(got, oracle::matrices_from_group(rows, cols));
  }
}

TEST(OrbitMatrix, MatrixPosetExamples) {
  const auto chain = matrix_poset(B("2,2"), B("2,2"));
  EXPECT_EQ(chain.size(), 3);
  EXPECT_EQ(chain.covers().size(), 2u);
  EXPECT_EQ(height(chain), 2);
  const auto big = matrix_poset(B("3,6"), B("3,3,3"));
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(height(big), 6);
  EXPECT_EQ(matrix_poset(B("6"), B("1,2,3")).size(), 1);
}

TEST(BackendEquivalence, HoldsOnRandomSmallSystems) {
  std::mt19937 rng(9);
  for (int s = 0; s < 80; ++s) {
    const int n = 1 + s % 7;
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << (n - 1)) - 1);
    const CosetSystem sys(GeneratorSet(n, IndexSet::from_mask(mask(rng) << 1)),
                          GeneratorSet(n, IndexSet::from_mask(mask(rng) << 1)));
    EXPECT_NO_THROW(check_backend_equivalence(coset_poset(sys), matrix_poset(sys.left_blocks(), sys.right_blocks()), sys));
  }
}

// Transposing the matrix keeps the dominance order (partial sums transpose
// too), so the mutation is caught by the margins for asymmetric block pairs.
TEST(BackendEquivalence, TransposedMappingIsRejected) {
  const auto rows = B("3,3");
  const auto cols = B("2,2,2");
  const auto sys = CosetSystem::from_blocks(rows, cols);
  const CosetToMatrix transposed = [](const Permutation& w, const CosetSystem& s) {
    return coset_to_matrix(w, s).transposed();
  };
  EXPECT_THROW(check_backend_equivalence(coset_poset(sys), matrix_poset(rows, cols), sys, transposed), BackendMismatch);
}

TEST(BackendEquivalence, RowReversedMappingIsRejectedOnOrder) {
  const auto rows = B("2,2");
  const auto cols = B("2,2");
  const auto sys = CosetSystem::from_blocks(rows, cols);
  const CosetToMatrix flipped = [](const Permutation& w, const CosetSystem& s) {
    auto g = coset_to_matrix(w, s).grid();
    std::reverse(g.begin(), g.end());
    return OrbitMatrix::from_entries(g);
  };
  try {
    check_backend_equivalence(coset_poset(sys), matrix_poset(rows, cols), sys, flipped);
    FAIL() << "row-reversed mapping accepted";
  } catch (const BackendMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("order disagreement"), std::string::npos) << e.what();
  }
}

TEST(BackendEquivalence, CountMismatchIsReported) {
  const auto sys = CosetSystem::from_blocks(B("2,2"), B("2,2"));
  EXPECT_THROW(check_backend_equivalence(coset_poset(sys), matrix_poset(B("2,2"), B("1,1,1,1")), sys), BackendMismatch);
}
