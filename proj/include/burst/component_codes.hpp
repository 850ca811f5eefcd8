#ifndef BURST_COMPONENT_CODES_HPP
#define BURST_COMPONENT_CODES_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "burst/params.hpp"
#include "burst/word.hpp"

namespace burst {

enum class ErrorClass {
  kNoError,
  kSingleDeletion,
  kTwoBurstDeletion,
  kMerge00To1,
  kMerge11To0,
  kPattern000To1,
  kPattern010To1,
  kPattern111To0,
  kPattern101To0,
};

/// "no-error", "single-deletion", "merge-00->1", "pattern-010->1", ...
std::string_view to_string(ErrorClass c);

/// 1-based inclusive coordinate interval.
struct Interval {
  std::size_t lo = 1;
  std::size_t hi = 0;

  std::size_t length() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(std::size_t v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// What a decoder recovered. `location` is in the codeword's coordinates:
/// the two merged symbols for a merge, the run holding the deleted symbol for
/// a single deletion, the leftmost deleted pair for a two-burst deletion.
struct DecodeOutcome {
  Word codeword;
  ErrorClass classification = ErrorClass::kNoError;
  std::optional<Interval> location;
};

// Varshamov-Tenengolts code, single deletion.
bool vt_member(const Word& x, VtParams p);
/// y has length n-1. Throws DecodeFailure / AmbiguityError.
Word vt_decode(const Word& y, VtParams p, std::size_t n);

// Levenshtein's code for a burst of at most two deletions.
bool lev2_member(const Word& x, Lev2Params p);
/// y has length n, n-1 or n-2.
DecodeOutcome lev2_decode(const Word& y, Lev2Params p, std::size_t n);

// (2,1)-burst correcting code.
bool c21_member(const Word& x, C21Params p);
/// y has length n-1. Corrects any (2,1)-burst, single deletions included.
DecodeOutcome c21_decode(const Word& y, C21Params p, std::size_t n);

// (2,1)-burst code with a location hint.
bool svt21_member(const Word& x, Svt21Params p);
/// y has length n-1 and the burst start (or the deleted coordinate) lies in
/// `window`, which must fit in [1, n] and be at most P long.
Word svt21_decode(const Word& y, Svt21Params p, Interval window, std::size_t n);

// Run-length limited subcodes.
int rll_max_run(const Word& x);
bool rll_member(const Word& x, int f);
bool c21rll_member(const Word& x, C21RllParams p);
/// ceil(log2 n) + 3.
int default_rll_bound(std::size_t n);

/// Throws DomainError when a residue is outside its modulus for length n.
void validate(VtParams p, std::size_t n);
void validate(Lev2Params p, std::size_t n);
void validate(C21Params p, std::size_t n);
void validate(C21RllParams p, std::size_t n);
void validate(Svt21Params p, std::size_t n);

}  // namespace burst

#endif  // BURST_COMPONENT_CODES_HPP
