#ifndef BURST_SRC_BUCKET_SEARCH_HPP
#define BURST_SRC_BUCKET_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "burst/codebook.hpp"
#include "burst/errors.hpp"

namespace burst::detail {

inline void check_enumeration_guard(std::size_t n, const SearchLimits& limits) {
  if (n > limits.max_n) {
    throw ResourceError("exhaustive search over 2^" + std::to_string(n) +
                        " words refused (guard n <= " + std::to_string(limits.max_n) +
                        ")");
  }
  if (n == 0 || n >= 63) {
    throw DomainError("search needs 1 <= n < 63");
  }
}

/// Shared engine behind every parameter search: enumerate F_2^n, keep the
/// words accepted by `in_ambient`, bucket them by `key(word)` and return the
/// largest bucket (smallest tuple on ties) as a codebook built by
/// `make_codebook(tuple)`.
template <class Ambient, class Key, class MakeCodebook>
SearchResult bucket_search(std::size_t n, const SearchLimits& limits,
                           std::uint64_t tuple_count, std::size_t tuple_width,
                           Ambient in_ambient, Key key, MakeCodebook make_codebook) {
  check_enumeration_guard(n, limits);
  SearchResult result;
  result.tuple_count = tuple_count;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    const Word w(v, n);
    if (!in_ambient(w)) continue;
    ++result.ambient_size;
    ++result.buckets[key(w)];
  }

  std::vector<int> best(tuple_width, 0);
  std::uint64_t best_size = 0;
  for (const auto& [tuple, count] : result.buckets) {
    if (count > best_size) {
      best = tuple;
      best_size = count;
    }
  }

  result.codebook = make_codebook(best);
  result.codebook.n = n;
  result.codebook.members.reserve(best_size);
  for (std::uint64_t v = 0; v < total; ++v) {
    const Word w(v, n);
    if (in_ambient(w) && key(w) == best) result.codebook.members.push_back(w);
  }
  return result;
}

}  // namespace burst::detail

#endif  // BURST_SRC_BUCKET_SEARCH_HPP
