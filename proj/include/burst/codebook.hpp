#ifndef BURST_CODEBOOK_HPP
#define BURST_CODEBOOK_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burst/params.hpp"
#include "burst/word.hpp"

namespace burst {

enum class CodeFamily { kExplicit, kVt, kLev2, kC21, kC21Rll, kSvt21, kCts, kC31 };

/// "explicit", "vt", "lev2", "c21", "c21rll", "svt21", "cts", "c31".
std::string_view to_string(CodeFamily family);
/// Inverse of to_string. Throws DomainError for unknown names.
CodeFamily parse_family(std::string_view name);

/// A finite set of equal-length words with the (t,s) burst it is meant to
/// correct and the parameters that defined it.
struct Codebook {
  CodeFamily family = CodeFamily::kExplicit;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  SyndromeParams params;
  std::vector<Word> members;  // sorted

  std::size_t size() const { return members.size(); }
  /// n - log2(size); +infinity for an empty codebook.
  double redundancy() const;

  /// Sorts and deduplicates. Throws DomainError on mixed lengths.
  static Codebook from_words(std::vector<Word> words, std::size_t t, std::size_t s);
};

/// Guards on exhaustive 2^n enumeration.
struct SearchLimits {
  std::size_t max_n = 24;
};

/// Outcome of a residue-bucket search: the largest bucket as a codebook plus
/// every nonempty bucket keyed by its residue tuple.
struct SearchResult {
  Codebook codebook;
  std::uint64_t ambient_size = 0;  // words that passed the ambient filter
  std::uint64_t tuple_count = 0;   // number of residue tuples, empty ones included
  std::map<std::vector<int>, std::uint64_t> buckets;
};

struct SearchOptions {
  SearchLimits limits;
  /// Window bound for svt21.
  int window = 0;
  /// Run-length bound for c21rll; 0 means ceil(log2 n) + 3.
  int rll_bound = 0;
};

/// Enumerates F_2^n (or the RLL slice for c21rll), buckets words by their
/// residue tuple and returns the largest bucket. Ties go to the
/// lexicographically smallest tuple. Supports vt, lev2, c21, c21rll, svt21.
/// Throws ResourceError when n exceeds the guard, DomainError for other
/// families or bad options.
SearchResult pigeonhole_search(CodeFamily family, std::size_t n,
                               const SearchOptions& options = {});

/// The (t,s) a family is designed to correct: vt (1,0), lev2 (2,0),
/// c21/c21rll/svt21 (2,1), c31 (3,1). Throws DomainError for cts/explicit.
std::pair<std::size_t, std::size_t> family_burst(CodeFamily family);

/// Best-bucket search for any family: pigeonhole_search for the component
/// codes, cts_param_search for cts (t and s required) and c31_param_search for
/// c31. t and s are ignored for the other families.
/// Builds the parameters of a family from a flat residue list: vt/lev2 "a";
/// c21 "a,b"; c21rll "a,b[,f]"; svt21 "c,d,P"; cts "a,b,c2,d2,...";
/// c31 "a,b,c,d". Throws DomainError on a wrong count or out-of-range value.
SyndromeParams params_from_list(CodeFamily family, std::size_t n, std::size_t t,
                                std::size_t s, const std::vector<int>& values);

/// Membership of x in the code described by params (length taken from x).
/// Throws DomainError for NoParams.
bool is_member(const Word& x, const SyndromeParams& params);

/// Every word of length n in the code described by params, found by
/// filtering F_2^n. Throws ResourceError when n exceeds the guard.
Codebook codebook_from_params(CodeFamily family, std::size_t n, std::size_t t,
                              std::size_t s, const SyndromeParams& params,
                              const SearchLimits& limits = {});

SearchResult search_family(CodeFamily family, std::size_t n, std::size_t t, std::size_t s,
                           const SearchOptions& options = {});

}  // namespace burst

#endif  // BURST_CODEBOOK_HPP
