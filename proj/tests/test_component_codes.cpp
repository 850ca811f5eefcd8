#include <gtest/gtest.h>

#include <cmath>

#include "burst/bits.hpp"
#include "burst/codebook.hpp"
#include "burst/component_codes.hpp"
#include "burst/error_model.hpp"
#include "burst/errors.hpp"
#include "oracle.hpp"

using burst::C21Params;
using burst::CodeFamily;
using burst::ErrorClass;
using burst::Interval;
using burst::Svt21Params;
using burst::Word;

namespace {

std::vector<std::string> c21_code(std::size_t n, int a, int b) {
  std::vector<std::string> out;
  for (const auto& x : oracle::all_words(n)) {
    if (oracle::mod(oracle::vt(x), 2 * n - 1) == a && oracle::weight(x) % 4 == b) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

TEST(Vt, Examples) {
  EXPECT_TRUE(burst::vt_member(Word::parse("0000"), {0}));
  EXPECT_TRUE(burst::vt_member(Word::parse("101"), {0}));
  // VT(1011) = 8, so the code is VT_3(4).
  EXPECT_TRUE(burst::vt_member(Word::parse("1011"), {3}));
  EXPECT_EQ(burst::vt_decode(Word::parse("101"), {3}, 4).to_string(), "1011");
}

TEST(Vt, RoundTripsEverySingleDeletion) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int a = 0; a <= static_cast<int>(n); ++a) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const Word x(v, n);
        if (!burst::vt_member(x, {a})) continue;
        for (std::size_t i = 0; i < n; ++i) {
          ASSERT_EQ(burst::vt_decode(x.erased(i, 1), {a}, n), x);
        }
      }
    }
  }
}

TEST(Lev2, Examples) {
  const auto o = burst::lev2_decode(Word::parse("01"), {6}, 4);
  EXPECT_EQ(o.codeword.to_string(), "0101");
  EXPECT_EQ(burst::lev2_decode(Word::parse("0101"), {6}, 4).codeword.to_string(), "0101");
  EXPECT_EQ(burst::lev2_decode(Word::parse("0101"), {6}, 4).classification,
            ErrorClass::kNoError);
  EXPECT_EQ(burst::lev2_decode(Word::parse("000"), {0}, 4).codeword.to_string(), "0000");
}

TEST(Lev2, RoundTripsBurstsOfAtMostTwoDeletions) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int a = 0; a < static_cast<int>(2 * n); ++a) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const Word x(v, n);
        if (!burst::lev2_member(x, {a})) continue;
        for (std::size_t len = 1; len <= 2; ++len) {
          for (std::size_t i = 0; i + len <= n; ++i) {
            ASSERT_EQ(burst::lev2_decode(x.erased(i, len), {a}, n).codeword, x);
          }
        }
      }
    }
  }
}

TEST(C21, ExampleMerge) {
  const C21Params p{1, 3};
  ASSERT_TRUE(burst::c21_member(Word::parse("10011"), p));
  const auto o = burst::c21_decode(Word::parse("1111"), p, 5);
  EXPECT_EQ(o.codeword.to_string(), "10011");
  EXPECT_EQ(o.classification, ErrorClass::kMerge00To1);
  ASSERT_TRUE(o.location.has_value());
  EXPECT_EQ(*o.location, (Interval{2, 3}));
}

TEST(C21, SingleDeletionWindowSpansTheRun) {
  const C21Params p{1, 3};
  const Word x = Word::parse("10011");
  // Either zero of the 00 run.
  for (std::size_t i : {1u, 2u}) {
    const auto o = burst::c21_decode(x.erased(i, 1), p, 5);
    EXPECT_EQ(o.codeword, x);
    EXPECT_EQ(o.classification, ErrorClass::kSingleDeletion);
    EXPECT_EQ(*o.location, (Interval{2, 3}));
  }
}

TEST(C21, DecoderAgreesWithBruteForceOracle) {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (int a = 0; a < static_cast<int>(2 * n - 1); ++a) {
      for (int b = 0; b < 4; ++b) {
        const auto code = c21_code(n, a, b);
        for (const auto& y : oracle::all_words(n - 1)) {
          const auto pre = oracle::preimages(code, y, 2, 1);
          ASSERT_LE(pre.size(), 1u) << "code C21(" << n << ";" << a << "," << b << ")";
          const Word yw = Word::parse(y);
          if (pre.empty()) {
            EXPECT_THROW(burst::c21_decode(yw, {a, b}, n), burst::DecodeFailure);
          } else {
            ASSERT_EQ(burst::c21_decode(yw, {a, b}, n).codeword.to_string(), pre[0]);
          }
        }
      }
    }
  }
}

TEST(C21, MergeClassificationMatchesGroundTruth) {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const Word x(v, n);
      const C21Params p{static_cast<int>(burst::vt_syndrome(x) % (2 * n - 1)),
                        static_cast<int>(x.weight() % 4)};
      for (const auto& spec : burst::all_bursts(n, 2, 1)) {
        const auto o = burst::c21_decode(burst::apply_burst(x, spec), p, n);
        ASSERT_EQ(o.codeword, x);
        const std::size_t i = spec.start - 1;
        const int ins = spec.inserted[0];
        if (x[i] == x[i + 1] && x[i] != ins) {
          const auto expected = x[i] == 0 ? ErrorClass::kMerge00To1 : ErrorClass::kMerge11To0;
          ASSERT_EQ(o.classification, expected);
          ASSERT_TRUE(o.location->contains(spec.start));
        } else {
          ASSERT_EQ(o.classification, ErrorClass::kSingleDeletion);
        }
      }
    }
  }
}

TEST(Svt21, ExampleThreeRows) {
  // Rows 2 and 3 of the worked array decode, with P = 3 and with P = 7.
  for (int P : {3, 7}) {
    const int m = 2 * P - 1;
    const Svt21Params row2{7 % m, 2, P};
    const Svt21Params row3{10 % m, 0, P};
    EXPECT_EQ(burst::svt21_decode(Word::parse("0101"), row2, {1, 3}, 5).to_string(), "01001");
    EXPECT_EQ(burst::svt21_decode(Word::parse("1010"), row3, {1, 3}, 5).to_string(), "11110");
  }
}

TEST(Svt21, RejectsWindowsOutsideTheWord) {
  const Svt21Params p{0, 0, 3};
  const Word y = Word::parse("0101");
  EXPECT_THROW(burst::svt21_decode(y, p, {0, 2}, 5), burst::DomainError);
  EXPECT_THROW(burst::svt21_decode(y, p, {3, 6}, 5), burst::DomainError);
  EXPECT_THROW(burst::svt21_decode(y, p, {1, 4}, 5), burst::DomainError);
}

TEST(Svt21, RoundTripsWithEveryWindowPlacement) {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (int P = 2; P <= static_cast<int>(n); ++P) {
      const std::size_t w = static_cast<std::size_t>(P);
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const Word x(v, n);
        const Svt21Params p{static_cast<int>(burst::vt_syndrome(x) % (2 * P - 1)),
                            static_cast<int>(x.weight() % 4), P};
        for (const auto& spec : burst::all_bursts(n, 2, 1)) {
          const Word y = burst::apply_burst(x, spec);
          for (std::size_t lo = 1; lo + w - 1 <= n; ++lo) {
            if (spec.start < lo || spec.start > lo + w - 1) continue;
            ASSERT_EQ(burst::svt21_decode(y, p, {lo, lo + w - 1}, n), x)
                << x.to_string() << " P=" << P << " start=" << spec.start;
          }
        }
      }
    }
  }
}

TEST(Svt21, BestBucketRedundancyWithinBound) {
  for (std::size_t n = 4; n <= 12; ++n) {
    for (int P = 3; P <= static_cast<int>(n); ++P) {
      burst::SearchOptions options;
      options.window = P;
      const auto r = burst::pigeonhole_search(CodeFamily::kSvt21, n, options);
      EXPECT_LE(r.codebook.redundancy(), std::log2(P) + 3.0) << n << " " << P;
    }
  }
}

TEST(Rll, Examples) {
  EXPECT_FALSE(burst::rll_member(Word::parse("1101110000"), 3));
  EXPECT_TRUE(burst::rll_member(Word::parse("1101110000"), 4));
  EXPECT_EQ(burst::default_rll_bound(8), 6);
  EXPECT_EQ(burst::default_rll_bound(9), 7);
}

TEST(Rll, SubsetHoldsAtLeastHalfTheWords) {
  for (std::size_t n = 8; n <= 16; ++n) {
    const int f = burst::default_rll_bound(n);
    std::uint64_t count = 0;
    for (const auto& x : oracle::all_words(n)) count += oracle::longest_run(x) <= f;
    EXPECT_GE(count, std::uint64_t{1} << (n - 1));
  }
}

TEST(Search, BucketsPartitionTheAmbientSet) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (CodeFamily f : {CodeFamily::kVt, CodeFamily::kLev2, CodeFamily::kC21,
                         CodeFamily::kC21Rll, CodeFamily::kSvt21}) {
      burst::SearchOptions options;
      options.window = 3;
      const auto r = burst::pigeonhole_search(f, n, options);
      std::uint64_t sum = 0;
      for (const auto& [key, count] : r.buckets) sum += count;
      EXPECT_EQ(sum, r.ambient_size);
      if (f != CodeFamily::kC21Rll) {
        EXPECT_EQ(r.ambient_size, std::uint64_t{1} << n);
      }
      // The chosen bucket is a largest one.
      for (const auto& [key, count] : r.buckets) EXPECT_LE(count, r.codebook.size());
    }
  }
}

TEST(Search, C21RllAmbientIsTheRunLimitedSet) {
  const std::size_t n = 10;
  const auto r = burst::pigeonhole_search(CodeFamily::kC21Rll, n);
  const int f = burst::default_rll_bound(n);
  std::uint64_t count = 0;
  for (const auto& x : oracle::all_words(n)) count += oracle::longest_run(x) <= f;
  EXPECT_EQ(r.ambient_size, count);
}

TEST(Search, C21CodebooksCorrectEveryBurst) {
  for (std::size_t n = 6; n <= 12; ++n) {
    const auto book = burst::pigeonhole_search(CodeFamily::kC21, n).codebook;
    const auto p = std::get<C21Params>(book.params);
    for (const Word& x : book.members) {
      for (const auto& spec : burst::all_bursts(n, 2, 1)) {
        ASSERT_EQ(burst::c21_decode(burst::apply_burst(x, spec), p, n).codeword, x);
      }
    }
    EXPECT_LE(book.redundancy(), std::log2(static_cast<double>(n)) + 4.0);
  }
}

TEST(Validate, RejectsOutOfRangeResidues) {
  EXPECT_THROW(burst::validate(burst::VtParams{5}, 4), burst::DomainError);
  EXPECT_THROW(burst::validate(burst::Lev2Params{8}, 4), burst::DomainError);
  EXPECT_THROW(burst::validate(C21Params{0, 4}, 4), burst::DomainError);
  EXPECT_THROW(burst::validate(Svt21Params{5, 0, 3}, 6), burst::DomainError);
  EXPECT_THROW(burst::validate(Svt21Params{0, 0, 0}, 6), burst::DomainError);
  EXPECT_NO_THROW(burst::validate(C21Params{6, 3}, 4));
}
