#ifndef BURST_SRC_CANDIDATES_HPP
#define BURST_SRC_CANDIDATES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "burst/errors.hpp"
#include "burst/word.hpp"

namespace burst::detail {

inline std::int64_t mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

/// Sorted, deduplicated candidates that satisfy `accept`.
template <class Accept>
std::vector<Word> survivors(std::vector<Word> candidates, Accept accept) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::erase_if(candidates, [&](const Word& w) { return !accept(w); });
  return candidates;
}

/// The single survivor, or DecodeFailure / AmbiguityError.
inline Word pick_unique(const std::vector<Word>& alive, const Word& received,
                        const std::string& code) {
  if (alive.empty()) {
    throw DecodeFailure(code + ": no codeword explains received word " +
                        received.to_string());
  }
  if (alive.size() > 1) {
    std::vector<std::string> listed;
    for (const Word& w : alive) listed.push_back(w.to_string());
    throw AmbiguityError(code + ": " + std::to_string(alive.size()) +
                             " codewords explain received word " +
                             received.to_string(),
                         std::move(listed));
  }
  return alive.front();
}

/// Words obtained from y by inserting every length-`count` word at every
/// position.
inline std::vector<Word> insertion_preimages(const Word& y, std::size_t count) {
  std::vector<Word> out;
  const std::uint64_t patterns = std::uint64_t{1} << count;
  for (std::size_t p = 0; p <= y.size(); ++p) {
    for (std::uint64_t v = 0; v < patterns; ++v) {
      out.push_back(y.inserted(p, Word(v, count)));
    }
  }
  return out;
}

/// 1-based coordinates p with x minus x_p equal to y, as an interval. They
/// always form one run of x. Returns an empty interval when none exist.
inline std::pair<std::size_t, std::size_t> deletion_run(const Word& x,
                                                        const Word& y) {
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.erased(p, 1) == y) {
      if (lo == 0) lo = p + 1;
      hi = p + 1;
    }
  }
  return {lo, hi};
}

}  // namespace burst::detail

#endif  // BURST_SRC_CANDIDATES_HPP
