#ifndef BURST_CONSTRUCTION_31_HPP
#define BURST_CONSTRUCTION_31_HPP

#include <cstddef>

#include "burst/codebook.hpp"
#include "burst/component_codes.hpp"
#include "burst/params.hpp"
#include "burst/word.hpp"

namespace burst {

/// All four congruences of C_{3,1}(n; a, b, c, d). Throws DomainError for odd
/// n or a length mismatch.
bool c31_member(const Word& x, const C31Params& p);

/// Parity-weight deltas of a received word against the code residues.
struct C31Deltas {
  int odd = 0;   // (b - odd-coordinate weight of y) mod 4
  int even = 0;  // (c - even-coordinate weight of y) mod 4
  int runs = 0;  // (d - r(y)) mod 5
  friend bool operator==(const C31Deltas&, const C31Deltas&) = default;
};

C31Deltas c31_deltas(const Word& y, const C31Params& p);

/// Maps a (odd, even) delta pair to its error class:
///   (3,0),(0,3) -> 000->1    (3,1),(1,3) -> 010->1
///   (2,1),(1,2) -> 111->0    (2,0),(0,2) -> 101->0
///   (0,0),(0,1),(1,0),(1,1) -> two-burst deletion
/// Throws DomainError for any other pair.
ErrorClass classify_delta_pair(int odd, int even);

/// Classifies a received word of length n-2. Throws DomainError when the
/// delta pair fits no class, i.e. y is not a (3,1)-corruption of any
/// codeword under these parameters.
ErrorClass classify_31(const Word& y, const C31Params& p);

struct C31DecodeTrace {
  Word codeword;
  C31Deltas deltas;
  ErrorClass classification = ErrorClass::kTwoBurstDeletion;
  std::size_t candidates = 0;
  /// Candidates passing every congruence except the run-count one.
  std::size_t survivors_without_runs = 0;
  std::size_t survivors = 0;
};

/// Classifies, enumerates the preimages consistent with the class, and keeps
/// those satisfying all four congruences. Throws DecodeFailure on zero
/// survivors and AmbiguityError on more than one.
C31DecodeTrace c31_decode_traced(const Word& y, const C31Params& p);
Word c31_decode(const Word& y, const C31Params& p);

/// Best (a, b, c, d) by bucket size over F_2^n; ties go to the smallest
/// tuple. Throws DomainError for odd n, ResourceError past the guard.
SearchResult c31_param_search(std::size_t n, const SearchLimits& limits = {});

}  // namespace burst

#endif  // BURST_CONSTRUCTION_31_HPP
