#include <string>

#include "burst/codebook.hpp"
#include "burst/component_codes.hpp"
#include "burst/construction_31.hpp"
#include "burst/construction_ts.hpp"
#include "burst/errors.hpp"
#include "bucket_search.hpp"

namespace burst {
namespace {

void expect_count(CodeFamily family, const std::vector<int>& values, std::size_t lo,
                  std::size_t hi) {
  if (values.size() < lo || values.size() > hi) {
    throw DomainError("family '" + std::string(to_string(family)) + "' takes " +
                      std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                      " parameters, got " + std::to_string(values.size()));
  }
}

struct MemberOf {
  const Word& x;
  bool operator()(const NoParams&) const {
    throw DomainError("an explicit word set has no membership rule");
  }
  bool operator()(const VtParams& p) const { return vt_member(x, p); }
  bool operator()(const Lev2Params& p) const { return lev2_member(x, p); }
  bool operator()(const C21Params& p) const { return c21_member(x, p); }
  bool operator()(const C21RllParams& p) const { return c21rll_member(x, p); }
  bool operator()(const Svt21Params& p) const { return svt21_member(x, p); }
  bool operator()(const CtsParams& p) const { return cts_member(x, p); }
  bool operator()(const C31Params& p) const { return c31_member(x, p); }
};

}  // namespace

SyndromeParams params_from_list(CodeFamily family, std::size_t n, std::size_t t,
                                std::size_t s, const std::vector<int>& v) {
  switch (family) {
    case CodeFamily::kVt:
      expect_count(family, v, 1, 1);
      validate(VtParams{v[0]}, n);
      return VtParams{v[0]};
    case CodeFamily::kLev2:
      expect_count(family, v, 1, 1);
      validate(Lev2Params{v[0]}, n);
      return Lev2Params{v[0]};
    case CodeFamily::kC21:
      expect_count(family, v, 2, 2);
      validate(C21Params{v[0], v[1]}, n);
      return C21Params{v[0], v[1]};
    case CodeFamily::kC21Rll: {
      expect_count(family, v, 2, 3);
      const C21RllParams p{v[0], v[1], v.size() == 3 ? v[2] : default_rll_bound(n)};
      validate(p, n);
      return p;
    }
    case CodeFamily::kSvt21: {
      expect_count(family, v, 3, 3);
      const Svt21Params p{v[0], v[1], v[2]};
      validate(p, n);
      return p;
    }
    case CodeFamily::kCts: {
      if (t <= s || s == 0) throw DomainError("cts needs t > s >= 1");
      const std::size_t rows = t - s;
      if (v.size() != 2 * rows) {
        throw DomainError("cts with t-s=" + std::to_string(rows) + " takes " +
                          std::to_string(2 * rows) + " parameters (a,b,c2,d2,...), got " +
                          std::to_string(v.size()));
      }
      std::vector<CtsParams::Row> row_params;
      for (std::size_t i = 2; i < v.size(); i += 2) row_params.push_back({v[i], v[i + 1]});
      return CtsParams::make(n, t, s, v[0], v[1], std::move(row_params));
    }
    case CodeFamily::kC31: {
      expect_count(family, v, 4, 4);
      const C31Params p{n, v[0], v[1], v[2], v[3]};
      validate(p);
      return p;
    }
    case CodeFamily::kExplicit:
      break;
  }
  throw DomainError("an explicit word set has no parameters");
}

bool is_member(const Word& x, const SyndromeParams& params) {
  return std::visit(MemberOf{x}, params);
}

Codebook codebook_from_params(CodeFamily family, std::size_t n, std::size_t t,
                              std::size_t s, const SyndromeParams& params,
                              const SearchLimits& limits) {
  detail::check_enumeration_guard(n, limits);
  Codebook book;
  book.family = family;
  book.n = n;
  book.params = params;
  if (family == CodeFamily::kCts) {
    book.t = t;
    book.s = s;
  } else {
    std::tie(book.t, book.s) = family_burst(family);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    const Word w(v, n);
    if (is_member(w, params)) book.members.push_back(w);
  }
  return book;
}

SearchResult search_family(CodeFamily family, std::size_t n, std::size_t t, std::size_t s,
                           const SearchOptions& options) {
  switch (family) {
    case CodeFamily::kCts:
      return cts_param_search(n, t, s, options.limits);
    case CodeFamily::kC31:
      return c31_param_search(n, options.limits);
    case CodeFamily::kExplicit:
      throw DomainError("an explicit codebook has no parameter search");
    default:
      return pigeonhole_search(family, n, options);
  }
}

}  // namespace burst
