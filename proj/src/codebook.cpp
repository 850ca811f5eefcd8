#include "burst/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "burst/bits.hpp"
#include "burst/component_codes.hpp"
#include "burst/errors.hpp"
#include "bucket_search.hpp"
#include "candidates.hpp"

namespace burst {

std::string_view to_string(CodeFamily family) {
  switch (family) {
    case CodeFamily::kExplicit: return "explicit";
    case CodeFamily::kVt: return "vt";
    case CodeFamily::kLev2: return "lev2";
    case CodeFamily::kC21: return "c21";
    case CodeFamily::kC21Rll: return "c21rll";
    case CodeFamily::kSvt21: return "svt21";
    case CodeFamily::kCts: return "cts";
    case CodeFamily::kC31: return "c31";
  }
  return "unknown";
}

CodeFamily parse_family(std::string_view name) {
  for (CodeFamily f : {CodeFamily::kExplicit, CodeFamily::kVt, CodeFamily::kLev2,
                       CodeFamily::kC21, CodeFamily::kC21Rll, CodeFamily::kSvt21,
                       CodeFamily::kCts, CodeFamily::kC31}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown code family '" + std::string(name) + "'");
}

double Codebook::redundancy() const {
  if (members.empty()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(n) - std::log2(static_cast<double>(members.size()));
}

Codebook Codebook::from_words(std::vector<Word> words, std::size_t t, std::size_t s) {
  Codebook book;
  book.t = t;
  book.s = s;
  if (!words.empty()) book.n = words.front().size();
  for (const Word& w : words) {
    if (w.size() != book.n) throw DomainError("codebook words have mixed lengths");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  book.members = std::move(words);
  return book;
}

std::pair<std::size_t, std::size_t> family_burst(CodeFamily family) {
  switch (family) {
    case CodeFamily::kVt: return {1, 0};
    case CodeFamily::kLev2: return {2, 0};
    case CodeFamily::kC21:
    case CodeFamily::kC21Rll:
    case CodeFamily::kSvt21: return {2, 1};
    case CodeFamily::kC31: return {3, 1};
    default: break;
  }
  throw DomainError("family '" + std::string(to_string(family)) +
                    "' has no fixed burst type");
}

SearchResult pigeonhole_search(CodeFamily family, std::size_t n,
                               const SearchOptions& options) {
  using detail::mod;
  const auto nn = static_cast<std::int64_t>(n);
  auto all = [](const Word&) { return true; };
  auto skeleton = [&](SyndromeParams params) {
    Codebook book;
    book.family = family;
    std::tie(book.t, book.s) = family_burst(family);
    book.params = std::move(params);
    return book;
  };

  switch (family) {
    case CodeFamily::kVt:
      return detail::bucket_search(
          n, options.limits, n + 1, 1, all,
          [&](const Word& w) { return std::vector<int>{int(mod(vt_syndrome(w), nn + 1))}; },
          [&](const std::vector<int>& k) { return skeleton(VtParams{k[0]}); });
    case CodeFamily::kLev2:
      return detail::bucket_search(
          n, options.limits, 2 * n, 1, all,
          [&](const Word& w) { return std::vector<int>{int(mod(rsyn0(w), 2 * nn))}; },
          [&](const std::vector<int>& k) { return skeleton(Lev2Params{k[0]}); });
    case CodeFamily::kC21:
    case CodeFamily::kC21Rll: {
      const bool rll = family == CodeFamily::kC21Rll;
      const int f = options.rll_bound > 0 ? options.rll_bound
                                          : (n > 0 ? default_rll_bound(n) : 1);
      auto key = [&](const Word& w) {
        return std::vector<int>{int(mod(vt_syndrome(w), 2 * nn - 1)),
                                int(w.weight() % 4)};
      };
      auto make = [&](const std::vector<int>& k) {
        return rll ? skeleton(C21RllParams{k[0], k[1], f})
                   : skeleton(C21Params{k[0], k[1]});
      };
      if (rll) {
        return detail::bucket_search(
            n, options.limits, 4 * (2 * n - 1), 2,
            [&](const Word& w) { return rll_member(w, f); }, key, make);
      }
      return detail::bucket_search(n, options.limits, 4 * (2 * n - 1), 2, all, key,
                                   make);
    }
    case CodeFamily::kSvt21: {
      const int P = options.window;
      if (P < 1) throw DomainError("svt21 search needs a window bound P >= 1");
      const std::int64_t modulus = 2 * std::int64_t{P} - 1;
      return detail::bucket_search(
          n, options.limits, 4 * static_cast<std::uint64_t>(modulus), 2, all,
          [&](const Word& w) {
            return std::vector<int>{int(mod(vt_syndrome(w), modulus)),
                                    int(w.weight() % 4)};
          },
          [&](const std::vector<int>& k) { return skeleton(Svt21Params{k[0], k[1], P}); });
    }
    default:
      break;
  }
  throw DomainError("pigeonhole_search does not handle family '" +
                    std::string(to_string(family)) + "'");
}

}  // namespace burst
