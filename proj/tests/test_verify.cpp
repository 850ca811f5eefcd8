#include <gtest/gtest.h>

#include "burst/codebook.hpp"
#include "burst/construction_31.hpp"
#include "burst/construction_ts.hpp"
#include "burst/error_model.hpp"
#include "burst/errors.hpp"
#include "burst/verify.hpp"

using burst::Codebook;
using burst::CodeFamily;
using burst::Word;

namespace {

Codebook words(std::initializer_list<const char*> list, std::size_t t, std::size_t s) {
  std::vector<Word> w;
  for (const char* x : list) w.push_back(Word::parse(x));
  return Codebook::from_words(std::move(w), t, s);
}

bool contains(const nlohmann::json& array, const std::string& value) {
  for (const auto& v : array) {
    if (v == value) return true;
  }
  return false;
}

}  // namespace

TEST(VerifyDisjoint, RemarkOneWitnesses) {
  const auto r22 = burst::verify_disjoint(words({"00100", "11111"}, 2, 2), 2, 2);
  EXPECT_FALSE(r22.passed);
  EXPECT_TRUE(contains(r22.witness["shared_all"], "11100"));
  EXPECT_EQ(r22.witness["shared_all"].size(), 2u);

  const auto r31 = burst::verify_disjoint(words({"11111", "01010"}, 3, 1), 3, 1);
  EXPECT_FALSE(r31.passed);
  EXPECT_EQ(r31.witness["shared"], "011");
  EXPECT_TRUE(contains(r31.witness["shared_all"], "011"));
}

TEST(VerifyDisjoint, WitnessReplays) {
  const auto r = burst::verify_disjoint(words({"00100", "11111"}, 2, 2), 2, 2);
  const Word z = Word::parse(r.witness["shared"].get<std::string>());
  for (const char* key : {"first", "second"}) {
    const auto b = burst::ball(Word::parse(r.witness[key].get<std::string>()), 2, 2);
    EXPECT_TRUE(std::binary_search(b.members.begin(), b.members.end(), z));
  }
}

TEST(VerifyDisjoint, TrivialCodebooksPass) {
  EXPECT_TRUE(burst::verify_disjoint(words({"10110"}, 2, 1), 2, 1).passed);
  EXPECT_TRUE(burst::verify_disjoint(Codebook{}, 2, 1).passed);
}

TEST(VerifyDisjoint, MixedLengthsAreADomainError) {
  Codebook book;
  book.n = 4;
  book.members = {Word::parse("0101"), Word::parse("01011")};
  EXPECT_THROW(burst::verify_disjoint(book, 2, 1), burst::DomainError);
  EXPECT_THROW(Codebook::from_words({Word::parse("01"), Word::parse("011")}, 1, 1),
               burst::DomainError);
}

TEST(VerifyRoundtrip, ConstructionCodebooksPass) {
  const auto c31 = burst::c31_param_search(12).codebook;
  const auto r = burst::verify_roundtrip(c31, 3, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.counts.at("corruptions"), c31.size() * 10 * 2);

  const auto cts = burst::cts_param_search(12, 4, 1).codebook;
  EXPECT_TRUE(burst::verify_roundtrip(cts, 4, 1).passed);
}

TEST(VerifyRoundtrip, WrongParamsFailFastWithAReplayableWitness) {
  auto book = burst::pigeonhole_search(CodeFamily::kC21, 10).codebook;
  auto& p = std::get<burst::C21Params>(book.params);
  p.a = (p.a + 1) % 19;
  const auto r = burst::verify_roundtrip(book, 2, 1);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.counts.at("corruptions"), 1u);

  const Word x = Word::parse(r.witness["codeword"].get<std::string>());
  const auto& b = r.witness["burst"];
  const burst::BurstSpec spec{b["t"], b["s"], b["start"],
                              Word::parse(b["inserted"].get<std::string>())};
  const Word y = burst::apply_burst(x, spec);
  EXPECT_EQ(y.to_string(), r.witness["received"]);
  const auto decode = burst::make_decoder(book);
  bool reproduced = false;
  try {
    reproduced = decode(y) != x;
  } catch (const burst::Error&) {
    reproduced = true;
  }
  EXPECT_TRUE(reproduced);
}

TEST(VerifyRoundtrip, DecoderMismatchIsAConfigurationError) {
  const auto book = burst::pigeonhole_search(CodeFamily::kC21, 8).codebook;
  EXPECT_THROW(burst::verify_roundtrip(book, 3, 1), burst::ConfigurationError);
  auto svt = burst::SearchOptions{};
  svt.window = 3;
  const auto svt_book = burst::pigeonhole_search(CodeFamily::kSvt21, 8, svt).codebook;
  EXPECT_THROW(burst::make_decoder(svt_book), burst::ConfigurationError);
  EXPECT_THROW(burst::make_decoder(words({"0101"}, 1, 1)), burst::ConfigurationError);
}

TEST(VerifyRoundtrip, PassingRoundtripImpliesDisjointness) {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (CodeFamily f : {CodeFamily::kVt, CodeFamily::kLev2, CodeFamily::kC21,
                         CodeFamily::kC21Rll}) {
      const auto book = burst::pigeonhole_search(f, n).codebook;
      const auto rt = burst::verify_roundtrip(book, book.t, book.s);
      const auto dj = burst::verify_disjoint(book, book.t, book.s);
      EXPECT_TRUE(rt.passed);
      EXPECT_TRUE(!rt.passed || dj.passed);
    }
  }
}

TEST(VerifyRoundtrip, Lev2AlsoCorrectsSingleDeletions) {
  const auto book = burst::pigeonhole_search(CodeFamily::kLev2, 10).codebook;
  EXPECT_TRUE(burst::verify_roundtrip(book, 1, 0).passed);
  EXPECT_TRUE(burst::verify_roundtrip(book, 2, 0).passed);
}

TEST(VerifySvtRoundtrip, BestBucketsPass) {
  for (int P : {3, 4, 6}) {
    burst::SearchOptions options;
    options.window = P;
    const auto book = burst::pigeonhole_search(CodeFamily::kSvt21, 9, options).codebook;
    const auto r = burst::verify_svt_roundtrip(book);
    EXPECT_TRUE(r.passed) << r.witness.dump();
    EXPECT_GT(r.counts.at("decodes"), r.counts.at("corruptions") - 1);
  }
}

TEST(VerifyEquivalence, Examples) {
  const auto remark = burst::verify_equivalence(words({"11111", "01010"}, 3, 1), 3, 1);
  EXPECT_TRUE(remark.passed);
  EXPECT_EQ(remark.counts.at("forward_pass"), 0u);
  EXPECT_EQ(remark.counts.at("swapped_pass"), 0u);

  const auto sym = burst::verify_equivalence(words({"0000", "1111"}, 2, 2), 2, 2);
  EXPECT_TRUE(sym.passed);

  for (std::size_t n : {8u, 10u, 12u}) {
    const auto book = burst::c31_param_search(n).codebook;
    EXPECT_TRUE(burst::verify_disjoint(book, 1, 3).passed);
    const auto r = burst::verify_equivalence(book, 3, 1);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.counts.at("swapped_pass"), 1u);
  }
}

TEST(VerifyEquivalence, HoldsForEveryPairOfShortWords) {
  // Exhaustive: every two-word code of length 6 and every (t,s).
  const std::size_t n = 6;
  for (std::size_t t = 1; t <= 3; ++t) {
    for (std::size_t s = 1; s <= 3; ++s) {
      for (std::uint64_t a = 0; a < 64; ++a) {
        for (std::uint64_t b = a + 1; b < 64; ++b) {
          Codebook book;
          book.n = n;
          book.members = {Word(a, n), Word(b, n)};
          ASSERT_TRUE(burst::verify_equivalence(book, t, s).passed);
        }
      }
    }
  }
}

TEST(VerifyBallLaws, PassesAndCountsSkippedFormulas) {
  burst::BallLawOptions options;
  options.n_max = 8;
  const auto r = burst::verify_ball_laws(options);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.counts.at("formula_checks"), 0u);
  EXPECT_GT(r.counts.at("formula_skipped"), 0u);
  EXPECT_EQ(r.counts.at("words"), 510u);
}

TEST(VerifyBallLaws, GuardRefusesLargeSweeps) {
  burst::BallLawOptions options;
  options.n_max = 15;
  EXPECT_THROW(burst::verify_ball_laws(options), burst::ResourceError);
  options.guard = 15;
  options.n_min = 15;
  options.n_max = 14;
  EXPECT_TRUE(burst::verify_ball_laws(options).passed);
}

TEST(BoundReport, Values) {
  const auto c31 = burst::bound_report(burst::c31_param_search(16).codebook);
  EXPECT_TRUE(c31.passed);
  EXPECT_EQ(c31.counts.at("bound"), 1092u);

  const auto c21 = burst::bound_report(burst::pigeonhole_search(CodeFamily::kC21, 8).codebook);
  EXPECT_TRUE(c21.passed);
  EXPECT_EQ(c21.counts.at("bound"), 16u);

  EXPECT_TRUE(burst::bound_report(Codebook{}).passed);
}

TEST(BoundReport, OversizedCodeFails) {
  // All of F_2^3 as a "(2,1)-code".
  Codebook book;
  book.n = 3;
  book.t = 2;
  book.s = 1;
  for (std::uint64_t v = 0; v < 8; ++v) book.members.push_back(Word(v, 3));
  const auto r = burst::bound_report(book);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness["bound"], 1);  // floor(2^2 / 3)
}

TEST(VerifyC31Classification, BestCodebooksPass) {
  for (std::size_t n : {8u, 10u, 12u}) {
    const auto r = burst::verify_c31_classification(burst::c31_param_search(n).codebook);
    EXPECT_TRUE(r.passed) << r.witness.dump();
    EXPECT_EQ(r.counts.at("ambiguous"), 0u);
  }
}

TEST(VerifyCtsStructure, BestCodebooksPass) {
  const auto r = burst::verify_cts_structure(burst::cts_param_search(12, 4, 2).codebook);
  EXPECT_TRUE(r.passed) << r.witness.dump();
  EXPECT_GT(r.counts.at("window_checks"), 0u);
}

TEST(Report, DeterministicJson) {
  const auto book = burst::c31_param_search(10).codebook;
  const auto a = burst::verify_roundtrip(book, 3, 1).to_json();
  const auto b = burst::verify_roundtrip(book, 3, 1).to_json();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema"], burst::kReportSchema);
  EXPECT_EQ(a["verdict"], "pass");
  EXPECT_FALSE(a.contains("wall_ms"));
  EXPECT_FALSE(a.contains("witness"));
  EXPECT_TRUE(burst::verify_roundtrip(book, 3, 1).to_json(true).contains("wall_ms"));
}
