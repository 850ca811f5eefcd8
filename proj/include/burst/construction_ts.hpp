#ifndef BURST_CONSTRUCTION_TS_HPP
#define BURST_CONSTRUCTION_TS_HPP

#include <cstddef>
#include <vector>

#include "burst/bits.hpp"
#include "burst/codebook.hpp"
#include "burst/component_codes.hpp"
#include "burst/params.hpp"
#include "burst/word.hpp"

namespace burst {

/// True iff length(x) = n, row 1 of the (t-s)-row array is in the RLL
/// (2,1)-burst code and every other row is in its (2,1)-burst SVT code.
/// Throws DomainError on a length mismatch.
bool cts_member(const Word& x, const CtsParams& p);

/// Per-row record of a two-phase decode.
struct CtsDecodeTrace {
  Word codeword;
  ArrayView received_rows;
  DecodeOutcome first_row;
  /// Column window handed to the SVT decoder of row i (index i-2), in the
  /// codeword's coordinates.
  std::vector<Interval> windows;
  std::vector<Word> decoded_rows;
};

/// Recovers the codeword from a word of length n-(t-s) produced by one
/// (t,s)-burst:
///   1. split y into t-s rows of length m-1;
///   2. decode row 1 with the (2,1)-burst decoder;
///   3. derive a column window for the other rows from row 1's outcome;
///   4. decode every other row with the SVT decoder inside that window;
///   5. interleave the rows back.
/// Throws DomainError on a length mismatch and DecodeFailure (carrying the
/// failing row) when some row cannot be decoded.
CtsDecodeTrace cts_decode_traced(const Word& y, const CtsParams& p);
Word cts_decode(const Word& y, const CtsParams& p);

/// Column window for rows 2..t-s given row 1's outcome, clamped to [1, m].
Interval cts_row_window(const DecodeOutcome& first_row, std::size_t s, std::size_t m);

/// Residue-bucket search over all (a, b, c_2, d_2, ..., c_{t-s}, d_{t-s}),
/// ambient set = words whose first row is run-length limited.
SearchResult cts_param_search(std::size_t n, std::size_t t, std::size_t s,
                              const SearchLimits& limits = {});

}  // namespace burst

#endif  // BURST_CONSTRUCTION_TS_HPP
