#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "burst/error_model.hpp"
#include "burst/errors.hpp"
#include "oracle.hpp"

using burst::BurstSpec;
using burst::Word;

namespace {

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

std::vector<std::string> strings(const std::set<std::string>& words) {
  return {words.begin(), words.end()};
}

}  // namespace

TEST(ApplyBurst, Examples) {
  const Word x = Word::parse("1101110000");
  EXPECT_EQ(burst::apply_burst(x, {3, 1, 1, Word::parse("0")}).to_string(), "01110000");
  EXPECT_EQ(burst::apply_burst(x, {3, 1, 1, Word::parse("1")}).to_string(), "11110000");
  EXPECT_EQ(burst::apply_burst(x, {2, 2, 4, Word::parse("11")}), x);
}

TEST(ApplyBurst, RejectsBadSpecs) {
  const Word x = Word::parse("10110");
  EXPECT_THROW(burst::apply_burst(x, {2, 1, 0, Word::parse("1")}), burst::DomainError);
  EXPECT_THROW(burst::apply_burst(x, {2, 1, 5, Word::parse("1")}), burst::DomainError);
  EXPECT_THROW(burst::apply_burst(x, {2, 1, 1, Word::parse("11")}), burst::DomainError);
  EXPECT_THROW(burst::apply_burst(x, {6, 1, 1, Word::parse("1")}), burst::DomainError);
}

TEST(AllBursts, CountAndOrder) {
  const auto bursts = burst::all_bursts(6, 2, 2);
  ASSERT_EQ(bursts.size(), 5u * 4u);
  EXPECT_EQ(bursts.front().start, 1u);
  EXPECT_EQ(bursts.front().inserted.to_string(), "00");
  EXPECT_EQ(bursts[1].inserted.to_string(), "01");
  EXPECT_EQ(bursts.back().start, 5u);
}

TEST(Ball, ExampleOne) {
  const auto b = burst::ball(Word::parse("101000111"), 4, 1);
  EXPECT_EQ(strings(b.members),
            (std::vector<std::string>{"000111", "100111", "101000", "101001", "101011",
                                      "101111", "110111"}));
  EXPECT_EQ(burst::ball_size_formula(9, 4, 1), 7u);
}

TEST(Ball, SingleSymbol) {
  const auto b = burst::ball(Word::parse("0"), 1, 1);
  EXPECT_EQ(strings(b.members), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(burst::ball_size_formula(1, 1, 1), 2u);
}

TEST(Ball, HammingBallForSingleSubstitution) {
  for (std::size_t n = 1; n <= 9; ++n) {
    EXPECT_EQ(burst::ball(Word::zeros(n), 1, 1).size(), n + 1);
  }
}

TEST(RefinedBall, ExampleTwo) {
  const Word x = Word::parse("101011100100");
  EXPECT_EQ(strings(burst::refined_ball(x, 3, 0)),
            (std::vector<std::string>{"011100100", "101000100", "101010100", "101011100",
                                      "101100100", "111100100"}));
  EXPECT_EQ(strings(burst::refined_ball(x, 4, 1)),
            (std::vector<std::string>{"100100100", "101011000", "101011101", "101011110"}));
  EXPECT_EQ(burst::refined_ball_size(x, 3, 0), 6u);
  EXPECT_EQ(burst::refined_ball_size(x, 4, 1), 4u);
  EXPECT_EQ(burst::ball(x, 4, 1).size(), 10u);
}

TEST(RefinedBall, ClosedFormSpotValues) {
  const Word x = Word::parse("0110");
  EXPECT_EQ(burst::refined_ball_size(x, 0, 2), 12u);
  EXPECT_EQ(burst::refined_ball(x, 0, 2).size(), 12u);
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(burst::refined_ball_size(Word::zeros(n), 1, 1), n);
  }
  EXPECT_THROW(burst::refined_ball_size(Word::parse("10110"), 2, 0), burst::DomainError);
}

TEST(RefinedBall, MatchesOracleEnumeration) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const Word x = Word::parse(s);
      for (std::size_t k = 0; k <= std::min<std::size_t>(n, 4); ++k) {
        for (std::size_t l = 0; l <= 3; ++l) {
          const auto expected = oracle::refined_ball(s, k, l);
          ASSERT_EQ(strings(burst::refined_ball(x, k, l)), strings(expected))
              << s << " k=" << k << " l=" << l;
          const bool divisible = l == 0   ? (k == 0 || n % k == 0)
                                 : l == 1 ? (k <= 1 || n % (k - 1) == 0)
                                          : true;
          if (divisible) {
            ASSERT_EQ(burst::refined_ball_size(x, k, l), expected.size())
                << s << " k=" << k << " l=" << l;
          }
        }
      }
    }
  }
}

TEST(Ball, MatchesOracleAndPartitionsExhaustively) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const Word x = Word::parse(s);
      for (std::size_t t = 1; t <= 4; ++t) {
        for (std::size_t sv = 1; sv <= 4; ++sv) {
          if (std::max(t, sv) > n) continue;
          const auto b = burst::ball(x, t, sv);
          const auto expected = oracle::ball(s, t, sv);
          ASSERT_EQ(strings(b.members), strings(expected));
          ASSERT_EQ(b.size(), (n - t + 2) << (sv - 1));

          std::set<std::string> joined;
          std::size_t total = 0;
          for (const auto& [k, l] : burst::ball_partition(t, sv)) {
            const auto part = oracle::refined_ball(s, k, l);
            total += part.size();
            joined.insert(part.begin(), part.end());
          }
          ASSERT_EQ(total, joined.size()) << "parts overlap at " << s;
          ASSERT_EQ(joined, expected) << "parts miss members at " << s;
        }
      }
    }
  }
}

TEST(BallPartition, BothDirections) {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(burst::ball_partition(4, 1), (P{{3, 0}, {4, 1}}));
  EXPECT_EQ(burst::ball_partition(1, 3), (P{{0, 2}, {1, 3}}));
  EXPECT_EQ(burst::ball_partition(2, 2), (P{{0, 0}, {1, 1}, {2, 2}}));
}

TEST(ApplyBurst, OutputLiesInBall) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng() % 9;
    const std::size_t t = 1 + rng() % 4;
    const std::size_t s = 1 + rng() % 4;
    if (t > n) continue;
    const Word x = Word::parse(oracle::random_word(rng, n));
    const auto b = burst::ball(x, t, s);
    for (const BurstSpec& spec : burst::all_bursts(n, t, s)) {
      ASSERT_TRUE(std::binary_search(b.members.begin(), b.members.end(),
                                     burst::apply_burst(x, spec)));
    }
  }
}

TEST(Bounds, Values) {
  EXPECT_EQ(burst::sphere_packing_bound(9, 4, 1), 9u);
  EXPECT_EQ(burst::sphere_packing_bound(12, 3, 1), 93u);
  EXPECT_EQ(burst::sphere_packing_bound(16, 3, 1), 1092u);
  EXPECT_EQ(burst::sphere_packing_bound(8, 2, 1), 16u);
  EXPECT_EQ(burst::sphere_packing_bound(12, 1, 3), 93u);
  EXPECT_EQ(burst::sphere_packing_bound_raw(12, 1), 315u);
  for (std::size_t n = 8; n <= 16; ++n) {
    EXPECT_EQ(burst::sphere_packing_bound(n, 3, 1), (std::uint64_t{1} << (n - 2)) / (n - 1));
  }
  EXPECT_NEAR(burst::redundancy_lower_bound(16, 3, 1), std::log2(15.0) + 2.0, 1e-12);
}
