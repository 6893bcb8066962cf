#include <gtest/gtest.h>

#include "golden.hpp"
#include "ntdice/error.hpp"
#include "ntdice/factorization.hpp"
#include "oracle.hpp"

namespace ntdice {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ntdice::Error";
  return ErrorCode::SyntaxError;
}

TEST(OddRounds, MatchesPrintedTableForSeven) {
  const auto f = odd_rounds(7);
  EXPECT_EQ(f.parity(), Parity::Odd);
  EXPECT_EQ(f.rounds(), golden::kRoundsN7);
}

TEST(OddRounds, Three) {
  const auto f = odd_rounds(3);
  EXPECT_EQ(f.rounds(), (std::vector<Round>{{{2, 3}}, {{1, 3}}, {{1, 2}}}));
}

TEST(OddRounds, RejectsBadN) {
  EXPECT_EQ(code_of([] { odd_rounds(6); }), ErrorCode::ParityError);
  EXPECT_EQ(code_of([] { odd_rounds(1); }), ErrorCode::NTooSmall);
}

TEST(EvenRounds, MatchesPrintedTableForSix) {
  const auto f = even_rounds(6);
  EXPECT_EQ(f.parity(), Parity::Even);
  EXPECT_EQ(f.rounds(), golden::kRoundsN6);
}

TEST(EvenRounds, Two) {
  const auto f = even_rounds(2);
  EXPECT_EQ(f.rounds(), (std::vector<Round>{{{1, 2}}}));
  EXPECT_TRUE(verify_partition(f).ok());
}

TEST(EvenRounds, RejectsBadN) {
  EXPECT_EQ(code_of([] { even_rounds(7); }), ErrorCode::ParityError);
  EXPECT_EQ(code_of([] { even_rounds(8); }), ErrorCode::ParityError);
  EXPECT_EQ(code_of([] { even_rounds(0); }), ErrorCode::ParityError);
}

TEST(EvenRounds, MiddleColumnHoldsPairWithN) {
  for (int n = 2; n <= 102; n += 4) {
    const auto f = even_rounds(n);
    for (int i = 1; i <= f.round_count(); ++i)
      EXPECT_EQ(f.round(i)[f.middle_column() - 1], VertexPair::of(i, n)) << n << " " << i;
  }
}

TEST(Position, Lookups) {
  const auto f7 = odd_rounds(7);
  EXPECT_EQ(position_of(f7, 2, 3).column, 1);
  EXPECT_TRUE(position_of(f7, 3, 3).absent());
  EXPECT_EQ(position_of(even_rounds(6), 5, 6).column, 2);
  EXPECT_EQ(code_of([&] { position_of(f7, 8, 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { position_of(f7, 1, 0); }), ErrorCode::IndexOutOfRange);
}

TEST(Position, AgreesWithLinearScan) {
  for (int n : {3, 5, 9, 11, 2, 6, 10, 14}) {
    const auto f = n % 2 ? odd_rounds(n) : even_rounds(n);
    for (int i = 1; i <= f.round_count(); ++i)
      for (Vertex v = 1; v <= n; ++v)
        EXPECT_EQ(position_of(f, i, v).column.value_or(0), oracle::scan_column(f.round(i), v));
  }
}

TEST(VerifyPartition, PrintedTablesPass) {
  const auto r7 = verify_partition(odd_rounds(7));
  EXPECT_TRUE(r7.ok()) << (r7.failures.empty() ? "" : r7.failures.front());
  const auto r6 = verify_partition(even_rounds(6));
  EXPECT_TRUE(r6.ok());
  EXPECT_TRUE(r6.twice_per_column_ok);
}

TEST(VerifyPartition, AgreesWithOracleOnSweep) {
  for (int n = 3; n <= 41; n += 2) {
    const auto f = odd_rounds(n);
    EXPECT_TRUE(oracle::is_edge_partition_into_matchings(n, f.rounds())) << n;
    EXPECT_TRUE(verify_partition(f).ok()) << n;
  }
  for (int n = 2; n <= 42; n += 4) {
    const auto f = even_rounds(n);
    EXPECT_TRUE(oracle::is_edge_partition_into_matchings(n, f.rounds())) << n;
    EXPECT_TRUE(verify_partition(f).ok()) << n;
  }
}

TEST(VerifyPartition, DetectsSwappedVertex) {
  auto rounds = golden::kRoundsN7;
  rounds[0][0] = VertexPair::of(2, 6);  // {2,7} -> {2,6}: {2,6} now twice, {2,7} missing, 6 twice in round 1
  const OneFactorization bad(7, Parity::Odd, rounds);
  EXPECT_FALSE(oracle::is_edge_partition_into_matchings(7, rounds));
  const auto rep = verify_partition(bad);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.partition_ok);
  EXPECT_FALSE(rep.matchings_ok);
  EXPECT_FALSE(rep.failures.empty());
}

TEST(VerifyPartition, DetectsBrokenColumnProperty) {
  // Swapping two columns of one round keeps the partition but breaks the
  // twice-per-column count.
  auto rounds = golden::kRoundsN6;
  std::swap(rounds[0][0], rounds[0][2]);
  const auto rep = verify_partition(OneFactorization(6, Parity::Even, rounds));
  EXPECT_TRUE(rep.partition_ok);
  EXPECT_TRUE(rep.matchings_ok);
  EXPECT_FALSE(rep.twice_per_column_ok);
}

TEST(VerifyPartition, DetectsWrongSitOut) {
  auto rounds = golden::kRoundsN7;
  std::swap(rounds[0], rounds[1]);
  const auto rep = verify_partition(OneFactorization(7, Parity::Odd, rounds));
  EXPECT_TRUE(rep.partition_ok);
  EXPECT_FALSE(rep.coverage_ok);
}

TEST(LeftCount, Examples) {
  EXPECT_EQ(left_count(odd_rounds(7), 3, 6), (LeftCount{2, 2, 1}));
  EXPECT_EQ(left_count(even_rounds(6), 3, 6), (LeftCount{2, 2, 1}));
  EXPECT_EQ(left_count(odd_rounds(3), 1, 2), (LeftCount{0, 0, 1}));
  EXPECT_EQ(code_of([] { left_count(odd_rounds(3), 1, 1); }), ErrorCode::IndexOutOfRange);
}

TEST(LeftCount, SevenThreeSixRowsByScan) {
  const auto& r = golden::kRoundsN7;
  // Left of 6 in rounds 2 and 4, right of it in 5 and 7.
  for (int i : {1, 3}) EXPECT_LT(oracle::scan_column(r[i], 3), oracle::scan_column(r[i], 6));
  for (int i : {4, 6}) EXPECT_GT(oracle::scan_column(r[i], 3), oracle::scan_column(r[i], 6));
}

// Odd: both present in n-2 rounds, one of them the tie, split evenly.
// Even: all n-1 rounds, one tie, split evenly, so the constant is (n-2)/2.
TEST(LeftCount, SymmetricAndMatchesOracle) {
  for (int n = 3; n <= 25; n += 2) {
    const auto f = odd_rounds(n);
    for (Vertex w = 1; w <= n; ++w)
      for (Vertex x = 1; x <= n; ++x) {
        if (w == x) continue;
        const auto c = left_count(f, w, x);
        const auto o = oracle::left_right(f.rounds(), w, x);
        ASSERT_EQ(c, (LeftCount{o.less, o.greater, o.ties}));
        ASSERT_EQ(c.less, (n - 3) / 2);
        ASSERT_EQ(c.greater, c.less);
        ASSERT_EQ(c.ties, 1);
      }
  }
  for (int n = 2; n <= 26; n += 4) {
    const auto f = even_rounds(n);
    for (Vertex w = 1; w <= n; ++w)
      for (Vertex x = 1; x <= n; ++x) {
        if (w == x) continue;
        const auto c = left_count(f, w, x);
        const auto o = oracle::left_right(f.rounds(), w, x);
        ASSERT_EQ(c, (LeftCount{o.less, o.greater, o.ties}));
        ASSERT_EQ(c.less, c.greater);
        ASSERT_EQ(c.less, (n - 2) / 2);
        ASSERT_EQ(c.ties, 1);
      }
  }
}

TEST(Serialize, TableLayout) {
  EXPECT_EQ(serialize(even_rounds(6), FactorFormat::Table),
            "Y_1 | {2,5},{1,6},{3,4}\n"
            "Y_2 | {1,3},{2,6},{4,5}\n"
            "Y_3 | {2,4},{3,6},{1,5}\n"
            "Y_4 | {3,5},{4,6},{1,2}\n"
            "Y_5 | {1,4},{5,6},{2,3}\n");
  EXPECT_EQ(serialize(odd_rounds(3), FactorFormat::Json),
            "{\"n\":3,\"parity\":\"odd\",\"rounds\":[[[2,3]],[[1,3]],[[1,2]]]}\n");
}

}  // namespace
}  // namespace ntdice
