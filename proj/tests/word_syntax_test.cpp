#include "obstrukt/word_syntax.hpp"

#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "obstrukt/verifier.hpp"

namespace obstrukt {
namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_word(text);
  } catch (const ParseError& ex) {
    return ex.position();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

TEST(ParseWordTest, Examples) {
  const MoveWord w = parse_word("xi(1)^2 * eta(1,(0,0,0,0),(1,0,0,0))");
  EXPECT_EQ(w, (MoveWord{XiSpin{1}, XiSpin{1}, EtaSpin{1, e, g1}}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_TRUE(parse_word("   ").empty());
  EXPECT_EQ(parse_word("theta((1,-2,0,3))"), (MoveWord{BasepointLoop{GroupElement(1, -2, 0, 3)}}));
  EXPECT_EQ(parse_word(" tau( 2 , 1 , (0,0,0,-1) ) "), (MoveWord{TauSpin{2, 1, GroupElement(0, 0, 0, -1)}}));
  EXPECT_EQ(parse_word("delta(3,2,(1,0,0,0),(0,1,0,0))"), (MoveWord{DeltaSpin{3, 2, g1, g2}}));
  EXPECT_EQ(parse_word("rho(2,(0,0,1,0),(0,0,0,0))^0").size(), 0u);
}

TEST(ParseWordTest, ErrorPositions) {
  EXPECT_EQ(error_position("xi(3)"), 3u);
  EXPECT_EQ(error_position("xi(1) *"), 7u);
  EXPECT_EQ(error_position("xi(1)^-2"), 6u);
  EXPECT_EQ(error_position("zeta(1)"), 0u);
  EXPECT_EQ(error_position("eta(1,(0,0,0),(0,0,0,0))"), 12u);
  EXPECT_EQ(error_position("delta(-1,1,(0,0,0,0),(0,0,0,0))"), 6u);
  try {
    parse_word("xi(3)");
  } catch (const ParseError& ex) {
    EXPECT_EQ(ex.found(), "'3'");
  }
}

TEST(ParseWordTest, ExponentCap) {
  EXPECT_EQ(parse_word("xi(2)^1000").size(), 1000u);
  EXPECT_THROW(parse_word("xi(2)^1000001"), ParseError);
  EXPECT_THROW(parse_word("xi(2)^600000 * xi(1)^600000"), ParseError);
  EXPECT_THROW(parse_word("xi(2)^99999999999999999999999"), ParseError);
}

TEST(ParseElementTest, Examples) {
  EXPECT_EQ(parse_element("(1,2,3,4)"), GroupElement(1, 2, 3, 4));
  EXPECT_EQ(parse_element(" ( -9223372036854775808 , 0,0,0)"),
            GroupElement(std::numeric_limits<std::int64_t>::min(), 0, 0, 0));
  EXPECT_THROW(parse_element("(1,2,3)"), ParseError);
  EXPECT_THROW(parse_element("(1,2,3,4) x"), ParseError);
  EXPECT_THROW(parse_element("(9223372036854775808,0,0,0)"), ParseError);
}

TEST(FormatTest, Examples) {
  EXPECT_EQ(format_element(GroupElement(1, -2, 0, 3)), "(1,-2,0,3)");
  EXPECT_EQ(format_word({}), "");
  EXPECT_EQ(format_word({XiSpin{1}, XiSpin{1}, EtaSpin{1, e, g1}}),
            "xi(1)^2 * eta(1,(0,0,0,0),(1,0,0,0))");
  EXPECT_EQ(format_move(DeltaSpin{2, 1, g2, e}), "delta(2,1,(0,1,0,0),(0,0,0,0))");
  EXPECT_EQ(format_move(TauSpin{1, 2, g1}), "tau(1,2,(1,0,0,0))");
}

TEST(RoundTripTest, RandomWords) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = i % 4;
    MoveWord w = random_word(rng, 8, 1000, n);
    // Force some runs so the exponent form is exercised.
    if (!w.empty() && i % 3 == 0) w.insert(w.begin(), 3, w.front());
    const std::string text = format_word(w);
    const MoveWord back = parse_word(text);
    EXPECT_EQ(back, w) << text;
    EXPECT_EQ(format_word(back), text);
  }
}

TEST(FuzzTest, RandomBytesNeverCrash) {
  std::mt19937_64 rng(42);
  const std::string alphabet = "xietarhoudlt()0123456789,-*^ \t\n\x01\xff";
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> any(0, 255);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int parsed = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k)
      s += i % 2 == 0 ? static_cast<char>(any(rng)) : alphabet[pick(rng)];
    try {
      parse_word(s);
      ++parsed;
    } catch (const ParseError& ex) {
      EXPECT_LE(ex.position(), s.size());
    }
  }
  EXPECT_GT(parsed, 0);
}

}  // namespace
}  // namespace obstrukt
