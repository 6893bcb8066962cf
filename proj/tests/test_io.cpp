#include <gtest/gtest.h>

#include "golden.hpp"
#include "ntdice/dice.hpp"
#include "ntdice/error.hpp"
#include "ntdice/tournament.hpp"

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

TEST(TournamentIo, MatrixParse) {
  const auto t = parse_tournament("0 1 0\n0 0 1\n1 0 0\n", TournamentFormat::Matrix);
  EXPECT_EQ(t, from_edges(3, std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}}));
}

TEST(TournamentIo, JsonSerialize) {
  EXPECT_EQ(serialize(transitive(3), TournamentFormat::Json), "{\"n\":3,\"beats\":[[1,2],[1,3],[2,3]]}\n");
  EXPECT_EQ(serialize(transitive(1), TournamentFormat::Json), "{\"n\":1,\"beats\":[]}\n");
  EXPECT_EQ(serialize(almost_transitive(3), TournamentFormat::Matrix), "0 1 0\n0 0 1\n1 0 0\n");
}

TEST(TournamentIo, RoundTripBothFormats) {
  for (int n = 1; n <= 16; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto t = random_tournament(n, seed);
      for (auto f : {TournamentFormat::Json, TournamentFormat::Matrix}) {
        const auto text = serialize(t, f);
        EXPECT_EQ(detect_tournament_format(text), f);
        ASSERT_EQ(parse_tournament(text, f), t) << n << " " << seed;
      }
    }
}

TEST(TournamentIo, MatrixErrors) {
  EXPECT_EQ(code_of([] { parse_tournament("", TournamentFormat::Matrix); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_tournament("0 2\n0 0\n", TournamentFormat::Matrix); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_tournament("0 1\n0\n", TournamentFormat::Matrix); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_tournament("1 1\n0 0\n", TournamentFormat::Matrix); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { parse_tournament("0 1\n1 0\n", TournamentFormat::Matrix); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { parse_tournament("0 0\n0 0\n", TournamentFormat::Matrix); }), ErrorCode::MissingEdge);
}

TEST(TournamentIo, JsonErrors) {
  EXPECT_EQ(code_of([] { parse_tournament("{\"n\":3,", TournamentFormat::Json); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_tournament("{\"n\":\"3\",\"beats\":[]}", TournamentFormat::Json); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_tournament("{\"n\":2,\"beats\":[[1]]}", TournamentFormat::Json); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_tournament("{\"n\":3,\"beats\":[[1,2],[2,3]]}", TournamentFormat::Json); }),
            ErrorCode::MissingEdge);
  EXPECT_EQ(code_of([] { parse_tournament("{\"n\":2,\"beats\":[[1,2],[2,1]]}", TournamentFormat::Json); }),
            ErrorCode::DuplicateEdge);
}

TEST(DiceIo, Formats) {
  const auto d = make_dice_set(golden::kThreeCycleDice);
  EXPECT_EQ(serialize(d, DiceFormat::Json), "{\"n\":3,\"sides\":3,\"dice\":[[1,5,9],[3,4,8],[2,6,7]]}\n");
  EXPECT_EQ(serialize(d, DiceFormat::Csv), "1,5,9\n3,4,8\n2,6,7\n");
  EXPECT_EQ(serialize(d, DiceFormat::Table),
            "X_1: | 1 | 5 | 9\n"
            "X_2: | 3 | 4 | 8\n"
            "X_3: | 2 | 6 | 7\n");
}

TEST(DiceIo, TableForSevenMatchesPrintedLayout) {
  const auto text = serialize(build_dice(almost_transitive(7)), DiceFormat::Table);
  EXPECT_EQ(text.substr(0, text.find('\n')), "X_1: |  1 | 10 | 19 | 27 | 35 | 40 | 45");
}

TEST(DiceIo, RoundTrip) {
  for (int n = 1; n <= 14; ++n) {
    const auto d = build_dice(random_tournament(n, 5));
    for (auto f : {DiceFormat::Json, DiceFormat::Csv}) {
      const auto text = serialize(d, f);
      EXPECT_EQ(detect_dice_format(text), f);
      ASSERT_EQ(parse_dice(text, f), d) << n;
    }
  }
}

TEST(DiceIo, Errors) {
  EXPECT_EQ(code_of([] { parse_dice("1,2\n3\n", DiceFormat::Csv); }), ErrorCode::SideCountMismatch);
  EXPECT_EQ(code_of([] { parse_dice("1,x\n", DiceFormat::Csv); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_dice("", DiceFormat::Csv); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_dice("1,2\n2,3\n", DiceFormat::Csv); }), ErrorCode::DuplicateLabelAcrossDice);
  EXPECT_EQ(code_of([] { parse_dice("{\"dice\":[[1],[\"a\"]]}", DiceFormat::Json); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_dice("{\"n\":3,\"sides\":1,\"dice\":[[1],[2]]}", DiceFormat::Json); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_dice("{\"n\":2,\"sides\":2,\"dice\":[[1],[2]]}", DiceFormat::Json); }),
            ErrorCode::SideCountMismatch);
  EXPECT_EQ(code_of([] { parse_dice("x", DiceFormat::Table); }), ErrorCode::SyntaxError);
}

}  // namespace
}  // namespace ntdice
