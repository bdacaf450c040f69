#include "mixprof/permutation.hpp"
#include "mixprof/symfunc/characters.hpp"
#include "mixprof/symfunc/kostka.hpp"
#include "mixprof/symfunc/partition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

using namespace mixprof;
using namespace mixprof::symfunc;

// p(n) by the Euler pentagonal recurrence.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    long s = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > i) break;
      const long sign = j % 2 ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(i - g1)];
      if (g2 <= i) s += sign * p[static_cast<std::size_t>(i - g2)];
    }
    p[static_cast<std::size_t>(i)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

TEST(Partition, RejectsInvalidParts) {
  EXPECT_THROW(Partition({2, 3}), PreconditionError);
  EXPECT_THROW(Partition({2, 0}), PreconditionError);
  EXPECT_EQ(Partition::from_multiset({1, 0, 3, 2}), Partition({3, 2, 1}));
}

TEST(EnumeratePartitions, ZeroGivesEmptyPartition) {
  const auto ps = enumerate_partitions(0);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(ps[0].empty());
  EXPECT_EQ(ps[0].size(), 0);
}

TEST(EnumeratePartitions, FourInReverseLexOrder) {
  const std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(enumerate_partitions(4), want);
}

TEST(EnumeratePartitions, CountsMatchPentagonalRecurrence) {
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
  for (int n = 1; n <= 25; ++n) EXPECT_EQ(static_cast<long>(enumerate_partitions(n).size()), partition_count(n)) << n;
}

TEST(EnumeratePartitions, SameSetAsRecursiveOracleAndSorted) {
  for (int n = 1; n <= 12; ++n) {
    const auto ps = enumerate_partitions(n);
    std::set<std::vector<int>> got;
    for (const auto& p : ps) got.insert(p.parts());
    EXPECT_EQ(got, oracle::partitions(n)) << n;
    EXPECT_EQ(ps.front(), Partition({n}));
    EXPECT_EQ(ps.back(), Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_TRUE(ps[i - 1] > ps[i]);
  }
}

TEST(PartitionsWithDepth, CoverAllPartitions) {
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (int r = 0; r <= n; ++r) {
      for (const auto& p : partitions_with_depth(n, r)) EXPECT_EQ(p.depth(), r);
      total += partitions_with_depth(n, r).size();
    }
    EXPECT_EQ(total, enumerate_partitions(n).size());
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Partition{5}), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(transpose(Partition({3, 2})), Partition({2, 2, 1}));
  EXPECT_EQ(transpose(Partition({2, 2})), Partition({2, 2}));
}

TEST(Transpose, IsAnInvolutionPreservingDimension) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(transpose(transpose(p)), p);
      EXPECT_EQ(dim_hook(p), dim_hook(transpose(p)));
    }
}

TEST(HookLengths, Examples) {
  EXPECT_EQ(hook_lengths(Partition{1}), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(hook_lengths(Partition({3, 2})), (std::vector<std::vector<int>>{{4, 3, 1}, {2, 1}}));
  EXPECT_EQ(hook_lengths(Partition{4}), (std::vector<std::vector<int>>{{4, 3, 2, 1}}));
}

TEST(HookLengths, ArmPlusLegPlusOneByCounting) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_partition(rng, 1 + trial % 12);
    const auto hooks = hook_lengths(p);
    for (int i = 0; i < p.length(); ++i)
      for (int j = 0; j < p[i]; ++j) {
        int arm = p[i] - j - 1;
        int leg = 0;
        for (int below = i + 1; below < p.length(); ++below) leg += p[below] > j;
        EXPECT_EQ(hooks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], arm + leg + 1);
      }
  }
}

TEST(DimHook, Examples) {
  EXPECT_EQ(dim_hook(Partition{7}), 1);
  EXPECT_EQ(dim_hook(Partition({3, 2})), 5);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(dim_hook(Partition({n - 1, 1})), n - 1);
}

TEST(DimHook, EqualsStandardTableauCount) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(dim_hook(p), oracle::syt_count(p.parts())) << p.to_string();
      EXPECT_EQ(dim_hook(p), kostka(p, std::vector<int>(static_cast<std::size_t>(n), 1))) << p.to_string();
    }
}

TEST(DimHook, LogVariantMatches) {
  for (const auto& p : enumerate_partitions(14)) EXPECT_NEAR(log_dim(p), std::log(to_double(dim_hook(p))), 1e-10);
}

TEST(DimHook, BurnsideSumOfSquares) {
  for (int n = 1; n <= 10; ++n) {
    Integer s = 0;
    for (const auto& p : enumerate_partitions(n)) s += dim_hook(p) * dim_hook(p);
    EXPECT_EQ(s, factorial(n)) << n;
  }
}

TEST(DimHook, FirstRowRemovalBounds) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const int r = p.depth();
      const Integer upper = binomial(n, r) * dim_hook(p.without_first_row());
      EXPECT_LE(dim_hook(p), upper) << p.to_string();
      if (2 * r <= n) {
        const Rational lower = Rational(upper) * (1 - Rational(2 * r, n));
        EXPECT_LE(lower, Rational(dim_hook(p))) << p.to_string();
      }
    }
}

TEST(MnCharacter, IdentityClassGivesDimension) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(mn_character(p, CycleType::identity(n)), dim_hook(p));
}

TEST(MnCharacter, StandardRepIsFixedPointsMinusOne) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& sigma : oracle::permutations(n)) {
      // trace of the permutation matrix minus the trivial summand
      int trace = 0;
      for (int i = 0; i < n; ++i) trace += sigma[static_cast<std::size_t>(i)] == i;
      EXPECT_EQ(mn_character(Partition({n - 1, 1}), cycle_type(sigma)), trace - 1);
    }
}

TEST(MnCharacter, SignOfTransposition) {
  for (int n = 2; n <= 9; ++n)
    EXPECT_EQ(mn_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), CycleType::transposition(n)), -1);
}

TEST(MnCharacter, RejectsSizeMismatch) {
  EXPECT_THROW(mn_character(Partition({2, 1}), CycleType{2, 1, 1}), PreconditionError);
}

// Young's rule: the permutation character on tabloids of content mu equals
// sum_lambda K_{lambda mu} chi_lambda. Kostka numbers come from the
// brute-force filler and tabloid counts from explicit colourings.
TEST(MnCharacter, TabloidCharacterDecomposition) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for (const auto& cls : enumerate_partitions(n)) {
        Perm sigma;
        int start = 0;
        for (int len : cls.parts()) {
          for (int i = 0; i < len; ++i) sigma.push_back(start + (i + 1) % len);
          start += len;
        }
        Integer s = 0;
        for (const auto& lambda : enumerate_partitions(n))
          s += oracle::kostka_brute(lambda.parts(), mu.parts()) * mn_character(lambda, CycleType(cls));
        EXPECT_EQ(s, oracle::tabloid_fixed_points(sigma, mu.parts())) << mu.to_string() << " at " << cls.to_string();
      }
}

// S_3 from explicit matrices: trivial, sign, and the 2-dimensional
// representation on {x in R^3 : sum x = 0} with basis e1 - e2, e2 - e3.
TEST(CharacterTable, SThreeFromExplicitMatrices) {
  const auto table = character_table(3);
  for (const auto& sigma : oracle::permutations(3)) {
    const auto ct = cycle_type(sigma);
    const std::size_t col = table.index_of(ct);
    // permutation matrix P acts by e_i -> e_sigma(i); restrict to the basis
    auto image = [&](int i, int j) {  // P(e_i - e_j) = e_s(i) - e_s(j)
      std::array<int, 3> v{0, 0, 0};
      v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] += 1;
      v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] -= 1;
      return v;
    };
    // coordinates in basis b1 = e1 - e2, b2 = e2 - e3: v = a b1 + b b2 gives a = v1, b = -v3
    const auto c1 = image(0, 1);
    const auto c2 = image(1, 2);
    const int trace = c1[0] + (-c2[2]);
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inversions += sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)];
    EXPECT_EQ(table.at(table.index_of(Partition{3}), col), 1);
    EXPECT_EQ(table.at(table.index_of(Partition({1, 1, 1})), col), inversions % 2 ? -1 : 1);
    EXPECT_EQ(table.at(table.index_of(Partition({2, 1})), col), trace);
  }
}

TEST(CharacterTable, SmallTables) {
  const auto t1 = character_table(1);
  ASSERT_EQ(t1.size(), 1u);
  EXPECT_EQ(t1.at(0, 0), 1);
  EXPECT_THROW(character_table(21), CapabilityError);
  EXPECT_THROW(character_table(0), CapabilityError);
  const auto t5 = character_table(5);
  Integer s = 0;
  const std::size_t id_col = t5.index_of(CycleType::identity(5));
  for (std::size_t i = 0; i < t5.size(); ++i) s += t5.at(i, id_col) * t5.at(i, id_col);
  EXPECT_EQ(s, 120);
}

TEST(CharacterTable, RowAndColumnOrthogonality) {
  for (int n = 1; n <= 10; ++n) {
    const auto t = character_table(n);
    const std::size_t p = t.size();
    std::vector<Integer> sizes;
    for (const auto& mu : t.classes()) sizes.push_back(class_size(mu));
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a; b < p; ++b) {
        Integer rows = 0, cols = 0;
        for (std::size_t c = 0; c < p; ++c) {
          rows += sizes[c] * t.at(a, c) * t.at(b, c);
          cols += t.at(c, a) * t.at(c, b);
        }
        EXPECT_EQ(rows, a == b ? factorial(n) : Integer(0));
        EXPECT_EQ(cols, a == b ? centralizer_order(t.classes()[a]) : Integer(0));
      }
  }
}

TEST(CharacterTable, CsvDumpShape) {
  std::ostringstream os;
  character_table(3).write_csv(os);
  EXPECT_EQ(os.str(), "lambda,\"(3)\",\"(2,1)\",\"(1,1,1)\"\n\"(3)\",1,1,1\n\"(2,1)\",-1,0,2\n\"(1,1,1)\",1,-1,1\n");
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka(Partition{5}, {2, 0, 3}), 1);
  EXPECT_EQ(kostka(Partition({2, 1}), {1, 1, 1}), 2);
  EXPECT_EQ(kostka(Partition({2, 2}), {2, 2}), 1);
  EXPECT_THROW(kostka(Partition({2, 2}), {2, 1}), PreconditionError);
  EXPECT_THROW(kostka(Partition({2, 2}), {5, -1}), PreconditionError);
}

TEST(Kostka, MatchesBruteForceFilling) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int trial = 0; trial < 4; ++trial) {
        // random composition of n with some zero entries
        std::vector<int> type;
        int left = n;
        while (left > 0) {
          const int a = std::uniform_int_distribution<int>(0, left)(rng);
          type.push_back(a);
          left -= a;
        }
        EXPECT_EQ(kostka(lambda, type), oracle::kostka_brute(lambda.parts(), type)) << lambda.to_string();
      }
}

TEST(Kostka, SymmetricInTypeOrder) {
  const std::vector<int> a{3, 1, 2};
  const std::vector<int> b{1, 2, 3};
  for (const auto& lambda : enumerate_partitions(6)) EXPECT_EQ(kostka(lambda, a), kostka(lambda, b));
}

TEST(SkewStandardCount, MatchesBruteForceOnStrippedFirstRow) {
  // SYT of lambda / (j) counted by the brute-force filler with j copies of a
  // smallest value pinned into row one.
  for (int n = 2; n <= 8; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int j = 1; j <= lambda.first_row(); ++j) {
        std::vector<int> type{j};
        type.insert(type.end(), static_cast<std::size_t>(n - j), 1);
        EXPECT_EQ(skew_standard_count(lambda, Partition{j}), oracle::kostka_brute(lambda.parts(), type));
      }
}

TEST(ClassSize, Examples) {
  EXPECT_EQ(class_size(CycleType::identity(6)), 1);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(class_size(CycleType::transposition(n)), n * (n - 1) / 2);
  EXPECT_EQ(class_size(CycleType{2, 2}), 3);
}

TEST(ClassSize, MatchesEnumerationAndSumsToFactorial) {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, long> counts;
    for (const auto& p : oracle::permutations(n)) ++counts[cycle_type(p).parts()];
    Integer total = 0;
    for (const auto& mu : enumerate_partitions(n)) {
      EXPECT_EQ(class_size(CycleType(mu)), counts[mu.parts()]);
      total += class_size(CycleType(mu));
    }
    EXPECT_EQ(total, factorial(n));
  }
}

}  // namespace
