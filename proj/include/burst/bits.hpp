#ifndef BURST_BITS_HPP
#define BURST_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "burst/word.hpp"

namespace burst {

/// Run structure of a non-empty word. Run indices count from zero.
struct RunProfile {
  std::vector<int> run_sequence;
  int run_count = 0;
  std::int64_t rsyn = 0;
};

/// Throws DomainError on the empty word.
RunProfile run_profile(const Word& x);

/// Number of runs; 0 for the empty word.
int run_count(const Word& x);

/// Run syndrome of 0 concatenated with x.
std::int64_t rsyn0(const Word& x);

/// Sum of i * x_i over 1-based coordinates.
std::int64_t vt_syndrome(const Word& x);

struct Weights {
  int total = 0;
  int odd = 0;   // coordinates 1, 3, 5, ...
  int even = 0;  // coordinates 2, 4, 6, ...
  friend bool operator==(const Weights&, const Weights&) = default;
};

Weights weights(const Word& x);

/// Longest run length; 0 for the empty word.
int max_run(const Word& x);

/// Column-major k-row view of a word: column j holds the j-th block of k
/// consecutive symbols.
struct ArrayView {
  std::vector<Word> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows[0].size(); }
  /// Rows joined by '/'.
  std::string to_string() const;
};

/// Throws DomainError unless k >= 1 and k divides length(x).
ArrayView interleave(const Word& x, std::size_t k);
/// Throws DomainError when the rows have different lengths.
Word deinterleave(const ArrayView& array);

/// ceil(log2(v)) for v >= 1.
std::size_t ceil_log2(std::size_t v);

}  // namespace burst

#endif  // BURST_BITS_HPP
