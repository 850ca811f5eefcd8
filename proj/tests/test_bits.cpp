#include <gtest/gtest.h>

#include <random>

#include "burst/bits.hpp"
#include "burst/errors.hpp"
#include "oracle.hpp"

using burst::Word;

TEST(RunProfile, Examples) {
  const auto p = burst::run_profile(Word::parse("1101110000"));
  EXPECT_EQ(p.run_sequence, (std::vector<int>{0, 0, 1, 2, 2, 2, 3, 3, 3, 3}));
  EXPECT_EQ(p.run_count, 4);
  EXPECT_EQ(p.rsyn, 19);

  const auto z = burst::run_profile(Word::parse("0000"));
  EXPECT_EQ(z.run_sequence, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(z.run_count, 1);
  EXPECT_EQ(z.rsyn, 0);

  EXPECT_EQ(burst::run_profile(Word::parse("01101110000")).rsyn, 29);
  EXPECT_THROW(burst::run_profile(Word()), burst::DomainError);
  EXPECT_EQ(burst::run_count(Word()), 0);
}

TEST(Rsyn0, Examples) {
  EXPECT_EQ(burst::rsyn0(Word::parse("1101110000")), 29);
  EXPECT_EQ(burst::rsyn0(Word::parse("1111")), 4);
  EXPECT_EQ(burst::rsyn0(Word::parse("0000")), 0);
}

TEST(VtSyndrome, Examples) {
  EXPECT_EQ(burst::vt_syndrome(Word::parse("101")), 4);
  EXPECT_EQ(burst::vt_syndrome(Word::parse("0000")), 0);
  EXPECT_EQ(burst::vt_syndrome(Word::parse("1101110000")), 18);
}

TEST(Weights, Examples) {
  // Coordinates 1 and 3 hold 1,0; coordinates 2 and 4 hold 1,1.
  EXPECT_EQ(burst::weights(Word::parse("1101")), (burst::Weights{3, 1, 2}));
  EXPECT_EQ(burst::weights(Word::parse("0000")), (burst::Weights{0, 0, 0}));
  EXPECT_EQ(burst::weights(Word::parse("101000111")), (burst::Weights{5, 4, 1}));
}

TEST(Interleave, Examples) {
  EXPECT_EQ(burst::interleave(Word::parse("101011100100"), 3).to_string(), "1011/0100/1100");
  EXPECT_EQ(burst::interleave(Word::parse("101010101110"), 3).to_string(), "1011/0101/1010");
  EXPECT_EQ(burst::interleave(Word::parse("10110"), 1).to_string(), "10110");
  EXPECT_THROW(burst::interleave(Word::parse("10110"), 2), burst::DomainError);
  EXPECT_THROW(burst::interleave(Word::parse("10110"), 0), burst::DomainError);
}

TEST(Bits, AgreeWithOracleExhaustively) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const Word x = Word::parse(s);
      const auto p = burst::run_profile(x);
      EXPECT_EQ(p.run_sequence, oracle::run_indices(s));
      EXPECT_EQ(p.run_count, oracle::runs(s));
      EXPECT_EQ(p.rsyn, oracle::rsyn(s));
      EXPECT_EQ(burst::rsyn0(x), oracle::rsyn0(s));
      EXPECT_EQ(burst::vt_syndrome(x), oracle::vt(s));
      EXPECT_EQ(burst::max_run(x), oracle::longest_run(s));
      const auto w = burst::weights(x);
      EXPECT_EQ(w.total, oracle::weight(s));
      EXPECT_EQ(w.odd, oracle::parity_weight(s, 1));
      EXPECT_EQ(w.even, oracle::parity_weight(s, 0));
    }
  }
}

TEST(Bits, Rsyn0IsRsynOfZeroPrefix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word x = Word::parse(oracle::random_word(rng, 1 + rng() % 60));
    EXPECT_EQ(burst::rsyn0(x), burst::run_profile(Word::parse("0") + x).rsyn);
  }
}

TEST(Bits, AppendingTheLastSymbolAddsLastRunIndex) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word x = Word::parse(oracle::random_word(rng, 1 + rng() % 60));
    const Word y = x + Word(static_cast<std::uint64_t>(x[x.size() - 1]), 1);
    const auto px = burst::run_profile(x);
    const auto py = burst::run_profile(y);
    EXPECT_EQ(py.run_count, px.run_count);
    EXPECT_EQ(py.rsyn, px.rsyn + px.run_count - 1);
  }
}

TEST(Bits, DeinterleaveInvertsInterleave) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      for (const auto& s : oracle::all_words(n)) {
        const Word x = Word::parse(s);
        const auto a = burst::interleave(x, k);
        ASSERT_EQ(burst::deinterleave(a), x);
        const auto expected = oracle::rows(s, k);
        for (std::size_t r = 0; r < k; ++r) ASSERT_EQ(a.rows[r].to_string(), expected[r]);
      }
    }
  }
}

TEST(Bits, VtSyndromeMaximumOnlyAtAllOnes) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const std::int64_t cap = static_cast<std::int64_t>(n * (n + 1) / 2);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const Word x(v, n);
      const auto vt = burst::vt_syndrome(x);
      ASSERT_LE(vt, cap);
      ASSERT_EQ(vt == cap, x == Word::ones(n));
    }
  }
}

TEST(Bits, CeilLog2) {
  EXPECT_EQ(burst::ceil_log2(1), 0u);
  EXPECT_EQ(burst::ceil_log2(2), 1u);
  EXPECT_EQ(burst::ceil_log2(5), 3u);
  EXPECT_EQ(burst::ceil_log2(8), 3u);
  EXPECT_EQ(burst::ceil_log2(9), 4u);
}
