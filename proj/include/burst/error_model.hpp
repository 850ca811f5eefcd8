#ifndef BURST_ERROR_MODEL_HPP
#define BURST_ERROR_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "burst/word.hpp"

namespace burst {

/// One (t,s)-burst: delete t consecutive symbols starting at the 1-based
/// coordinate `start`, then insert `inserted` (length s) there.
struct BurstSpec {
  std::size_t t = 0;
  std::size_t s = 0;
  std::size_t start = 1;
  Word inserted;

  friend bool operator==(const BurstSpec&, const BurstSpec&) = default;
};

/// Throws DomainError when start is outside [1, n-t+1] or the inserted word
/// does not have length s.
Word apply_burst(const Word& x, const BurstSpec& spec);

/// Every (start, inserted) pair for a length-n carrier, starts ascending and
/// inserted words in lexicographic order.
std::vector<BurstSpec> all_bursts(std::size_t n, std::size_t t, std::size_t s);

/// The (t,s)-burst ball with members sorted and deduplicated.
struct Ball {
  Word center;
  std::size_t t = 0;
  std::size_t s = 0;
  std::vector<Word> members;

  std::size_t size() const { return members.size(); }
};

/// Exact enumeration. Throws DomainError when t > length(x).
Ball ball(const Word& x, std::size_t t, std::size_t s);

/// (k,l)-burst outcomes whose first and last inserted symbols differ from the
/// first and last deleted symbols. With k == 0 or l == 0 there is no boundary
/// constraint: the set is the plain burst-insertion or burst-deletion ball.
/// Sorted, deduplicated. Throws DomainError when k > length(x).
std::vector<Word> refined_ball(const Word& x, std::size_t k, std::size_t l);

/// Closed-form |refined_ball(x, k, l)|:
///   l == 0: 1 + sum over rows of A_k(x) of (runs - 1), needs k | n (k == 0 gives 1)
///   l == 1: n - sum over rows of A_{k-1}(x) of runs, needs (k-1) | n (k == 1 gives n)
///   l >= 2, k >= 1: (n-k+1) * 2^(l-2)
///   k == 0, l >= 1: n * 2^(l-1) + 2^l
/// Throws DomainError when the applicable divisibility fails or k > n; callers
/// may fall back to enumeration.
std::uint64_t refined_ball_size(const Word& x, std::size_t k, std::size_t l);

/// The (k,l) pairs whose refined balls partition B_{t,s}: (t-s+l, l) for
/// l = 0..s when t >= s, else (k, s-t+k) for k = 0..t.
std::vector<std::pair<std::size_t, std::size_t>> ball_partition(std::size_t t,
                                                                std::size_t s);

/// (n-t+2) * 2^(s-1). Requires s >= 1 and n >= max(t, s).
std::uint64_t ball_size_formula(std::size_t n, std::size_t t, std::size_t s);

/// floor(2^(n-m+1) / (n-m+2)) with m = max(t, s), the stronger of the two
/// bounds obtained by swapping deletions and insertions.
std::uint64_t sphere_packing_bound(std::size_t n, std::size_t t, std::size_t s);

/// floor(2^(n-t+1) / (n-t+2)), ignoring the swap.
std::uint64_t sphere_packing_bound_raw(std::size_t n, std::size_t t);

/// log2(n-m+2) + m - 1 with m = max(t, s): the least redundancy any
/// (t,s)-burst correcting code of length n can have.
double redundancy_lower_bound(std::size_t n, std::size_t t, std::size_t s);

}  // namespace burst

#endif  // BURST_ERROR_MODEL_HPP
