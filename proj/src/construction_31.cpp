#include "burst/construction_31.hpp"

#include <string>

#include "burst/bits.hpp"
#include "burst/errors.hpp"
#include "bucket_search.hpp"
#include "candidates.hpp"

namespace burst {

using detail::mod;

namespace {

void require_even(std::size_t n) {
  if (n == 0 || n % 2 != 0) {
    throw DomainError("C31 needs an even length n > 0 (n=" + std::to_string(n) + ")");
  }
}

bool congruences_without_runs(const Word& x, const C31Params& p) {
  if (mod(rsyn0(x), 4 * static_cast<std::int64_t>(p.n)) != p.a) return false;
  const Weights w = weights(x);
  return w.odd % 4 == p.b && w.even % 4 == p.c;
}

}  // namespace

bool c31_member(const Word& x, const C31Params& p) {
  require_even(p.n);
  if (x.size() != p.n) {
    throw DomainError("word has length " + std::to_string(x.size()) +
                      ", C31 expects n=" + std::to_string(p.n));
  }
  return congruences_without_runs(x, p) && run_count(x) % 5 == p.d;
}

C31Deltas c31_deltas(const Word& y, const C31Params& p) {
  const Weights w = weights(y);
  return C31Deltas{static_cast<int>(mod(p.b - w.odd, 4)),
                   static_cast<int>(mod(p.c - w.even, 4)),
                   static_cast<int>(mod(p.d - run_count(y), 5))};
}

ErrorClass classify_delta_pair(int odd, int even) {
  const auto is = [&](int u, int v) {
    return (odd == u && even == v) || (odd == v && even == u);
  };
  if (is(3, 0)) return ErrorClass::kPattern000To1;
  if (is(3, 1)) return ErrorClass::kPattern010To1;
  if (is(2, 1)) return ErrorClass::kPattern111To0;
  if (is(2, 0)) return ErrorClass::kPattern101To0;
  if (odd <= 1 && even <= 1 && odd >= 0 && even >= 0) {
    return ErrorClass::kTwoBurstDeletion;
  }
  throw DomainError("delta pair (" + std::to_string(odd) + "," + std::to_string(even) +
                    ") matches no (3,1)-burst class");
}

ErrorClass classify_31(const Word& y, const C31Params& p) {
  validate(p);
  if (y.size() + 2 != p.n) {
    throw DomainError("received word has length " + std::to_string(y.size()) +
                      ", expected n-2=" + std::to_string(p.n - 2));
  }
  const C31Deltas d = c31_deltas(y, p);
  return classify_delta_pair(d.odd, d.even);
}

C31DecodeTrace c31_decode_traced(const Word& y, const C31Params& p) {
  C31DecodeTrace trace;
  trace.classification = classify_31(y, p);
  trace.deltas = c31_deltas(y, p);

  std::vector<Word> candidates;
  if (trace.classification == ErrorClass::kTwoBurstDeletion) {
    candidates = detail::insertion_preimages(y, 2);
  } else {
    // The received symbol that replaced the deleted triple, and the triple.
    int kept = 1;
    Word triple;
    switch (trace.classification) {
      case ErrorClass::kPattern000To1: kept = 1; triple = Word::parse("000"); break;
      case ErrorClass::kPattern010To1: kept = 1; triple = Word::parse("010"); break;
      case ErrorClass::kPattern111To0: kept = 0; triple = Word::parse("111"); break;
      default: kept = 0; triple = Word::parse("101"); break;
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == kept) candidates.push_back(y.replaced(j, 1, triple));
    }
  }
  trace.candidates = candidates.size();

  const auto partial = detail::survivors(
      std::move(candidates), [&](const Word& x) { return congruences_without_runs(x, p); });
  trace.survivors_without_runs = partial.size();
  std::vector<Word> alive;
  for (const Word& x : partial) {
    if (run_count(x) % 5 == p.d) alive.push_back(x);
  }
  trace.survivors = alive.size();
  trace.codeword = detail::pick_unique(alive, y, "C31");
  return trace;
}

Word c31_decode(const Word& y, const C31Params& p) {
  return c31_decode_traced(y, p).codeword;
}

SearchResult c31_param_search(std::size_t n, const SearchLimits& limits) {
  require_even(n);
  const auto modulus = 4 * static_cast<std::int64_t>(n);
  auto key = [&](const Word& w) {
    const Weights wt = weights(w);
    return std::vector<int>{static_cast<int>(mod(rsyn0(w), modulus)), wt.odd % 4,
                            wt.even % 4, run_count(w) % 5};
  };
  auto make = [&](const std::vector<int>& k) {
    Codebook book;
    book.family = CodeFamily::kC31;
    book.t = 3;
    book.s = 1;
    book.params = C31Params{n, k[0], k[1], k[2], k[3]};
    return book;
  };
  return detail::bucket_search(
      n, limits, static_cast<std::uint64_t>(modulus) * 4 * 4 * 5, 4,
      [](const Word&) { return true; }, key, make);
}

}  // namespace burst
