#include "burst/bits.hpp"

#include <algorithm>
#include <bit>

#include "burst/errors.hpp"

namespace burst {

RunProfile run_profile(const Word& x) {
  if (x.empty()) {
    throw DomainError("run profile of the empty word is undefined");
  }
  RunProfile profile;
  profile.run_sequence.reserve(x.size());
  int index = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0 && x[i] != x[i - 1]) ++index;
    profile.run_sequence.push_back(index);
    profile.rsyn += index;
  }
  profile.run_count = index + 1;
  return profile;
}

int run_count(const Word& x) {
  if (x.empty()) return 0;
  // Runs = 1 + number of adjacent unequal pairs.
  const std::uint64_t diff = (x.packed() ^ (x.packed() >> 1)) &
                             ((x.size() >= 64 ? ~0ull : (1ull << x.size()) - 1) >> 1);
  return 1 + std::popcount(diff);
}

std::int64_t rsyn0(const Word& x) {
  std::int64_t total = 0;
  int index = 0;
  int previous = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != previous) ++index;
    previous = x[i];
    total += index;
  }
  return total;
}

std::int64_t vt_syndrome(const Word& x) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) total += static_cast<std::int64_t>(i + 1);
  }
  return total;
}

Weights weights(const Word& x) {
  Weights w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    ++w.total;
    // 0-based even index is an odd 1-based coordinate.
    if (i % 2 == 0) {
      ++w.odd;
    } else {
      ++w.even;
    }
  }
  return w;
}

int max_run(const Word& x) {
  int best = 0;
  int current = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    current = (i > 0 && x[i] == x[i - 1]) ? current + 1 : 1;
    best = std::max(best, current);
  }
  return best;
}

std::string ArrayView::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += '/';
    out += rows[i].to_string();
  }
  return out;
}

ArrayView interleave(const Word& x, std::size_t k) {
  if (k == 0 || x.size() % k != 0) {
    throw DomainError("row count " + std::to_string(k) +
                      " does not divide word length " + std::to_string(x.size()));
  }
  const std::size_t columns = x.size() / k;
  ArrayView array;
  array.rows.reserve(k);
  for (std::size_t row = 0; row < k; ++row) {
    std::uint64_t bits = 0;
    for (std::size_t col = 0; col < columns; ++col) {
      bits = (bits << 1) | static_cast<std::uint64_t>(x[col * k + row]);
    }
    array.rows.emplace_back(bits, columns);
  }
  return array;
}

Word deinterleave(const ArrayView& array) {
  const std::size_t k = array.row_count();
  const std::size_t columns = array.column_count();
  for (const Word& row : array.rows) {
    if (row.size() != columns) {
      throw DomainError("array rows have different lengths");
    }
  }
  std::uint64_t bits = 0;
  for (std::size_t col = 0; col < columns; ++col) {
    for (std::size_t row = 0; row < k; ++row) {
      bits = (bits << 1) | static_cast<std::uint64_t>(array.rows[row][col]);
    }
  }
  return Word(bits, k * columns);
}

std::size_t ceil_log2(std::size_t v) {
  if (v == 0) throw DomainError("ceil_log2 of zero");
  return static_cast<std::size_t>(std::bit_width(v - 1));
}

}  // namespace burst
