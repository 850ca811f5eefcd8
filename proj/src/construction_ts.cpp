#include "burst/construction_ts.hpp"

#include <algorithm>
#include <string>

#include "burst/bits.hpp"
#include "burst/errors.hpp"
#include "bucket_search.hpp"
#include "candidates.hpp"

namespace burst {

bool cts_member(const Word& x, const CtsParams& p) {
  if (x.size() != p.n()) {
    throw DomainError("word has length " + std::to_string(x.size()) +
                      ", construction expects n=" + std::to_string(p.n()));
  }
  const ArrayView array = interleave(x, p.row_count());
  if (!c21rll_member(array.rows[0], C21RllParams{p.a(), p.b(), p.rll_bound()})) {
    return false;
  }
  for (std::size_t i = 2; i <= p.row_count(); ++i) {
    const auto& r = p.row(i);
    if (!svt21_member(array.rows[i - 1], Svt21Params{r.c, r.d, p.window_bound()})) {
      return false;
    }
  }
  return true;
}

Interval cts_row_window(const DecodeOutcome& first_row, std::size_t s, std::size_t m) {
  if (!first_row.location) {
    throw DecodeFailure("first row outcome carries no location");
  }
  const Interval loc = *first_row.location;
  // Merges pin row 1's burst to columns [i, i+1]; every other row starts its
  // error in column i-1 or i. A deletion is only known up to its run
  // [c1, c2]; the other rows start in [c1-1, c2], or [c1-2, c2] when s >= 2
  // and the burst wraps from the last row into row 1.
  const bool merge = first_row.classification == ErrorClass::kMerge00To1 ||
                     first_row.classification == ErrorClass::kMerge11To0;
  const std::size_t reach = (!merge && s >= 2) ? 2 : 1;
  const std::size_t lo = loc.lo > reach ? loc.lo - reach : 1;
  return Interval{lo, std::min(loc.hi, m)};
}

CtsDecodeTrace cts_decode_traced(const Word& y, const CtsParams& p) {
  const std::size_t r = p.row_count();
  const std::size_t m = p.row_length();
  if (y.size() + r != p.n()) {
    throw DomainError("received word has length " + std::to_string(y.size()) +
                      ", expected n-(t-s)=" + std::to_string(p.n() - r));
  }
  if (m < 2) {
    throw DomainError("array rows of length 1 cannot absorb a burst");
  }

  CtsDecodeTrace trace;
  trace.received_rows = interleave(y, r);

  try {
    trace.first_row = c21_decode(trace.received_rows.rows[0], C21Params{p.a(), p.b()}, m);
  } catch (const DecodeFailure& e) {
    throw DecodeFailure(std::string("row 1: ") + e.what(), 1);
  } catch (const AmbiguityError& e) {
    throw AmbiguityError(std::string("row 1: ") + e.what(), e.candidates());
  }
  if (!rll_member(trace.first_row.codeword, p.rll_bound())) {
    throw DecodeFailure("row 1: decoded row violates the run-length bound", 1);
  }
  trace.decoded_rows.push_back(trace.first_row.codeword);

  if (r > 1) {
    const Interval window = cts_row_window(trace.first_row, p.s(), m);
    if (window.length() > static_cast<std::size_t>(p.window_bound())) {
      throw DecodeFailure("column window [" + std::to_string(window.lo) + ", " +
                              std::to_string(window.hi) + "] is longer than P=" +
                              std::to_string(p.window_bound()),
                          2);
    }
    for (std::size_t i = 2; i <= r; ++i) {
      const auto& residues = p.row(i);
      trace.windows.push_back(window);
      try {
        trace.decoded_rows.push_back(
            svt21_decode(trace.received_rows.rows[i - 1],
                         Svt21Params{residues.c, residues.d, p.window_bound()}, window,
                         m));
      } catch (const DecodeFailure& e) {
        throw DecodeFailure("row " + std::to_string(i) + ": " + e.what(), i);
      } catch (const AmbiguityError& e) {
        throw AmbiguityError("row " + std::to_string(i) + ": " + e.what(),
                             e.candidates());
      }
    }
  }

  trace.codeword = deinterleave(ArrayView{trace.decoded_rows});
  return trace;
}

Word cts_decode(const Word& y, const CtsParams& p) {
  return cts_decode_traced(y, p).codeword;
}

SearchResult cts_param_search(std::size_t n, std::size_t t, std::size_t s,
                              const SearchLimits& limits) {
  detail::check_enumeration_guard(n, limits);
  // Validates t, s and divisibility.
  const CtsParams shape =
      CtsParams::make(n, t, s, 0, 0,
                      std::vector<CtsParams::Row>(t >= s + 1 ? t - s - 1 : 0));
  const std::size_t r = shape.row_count();
  const std::size_t m = shape.row_length();
  const int f = shape.rll_bound();
  const std::int64_t row1_modulus = 2 * static_cast<std::int64_t>(m) - 1;
  const std::int64_t svt_modulus = 2 * std::int64_t{shape.window_bound()} - 1;

  std::uint64_t tuples = static_cast<std::uint64_t>(row1_modulus) * 4;
  for (std::size_t i = 2; i <= r; ++i) tuples *= static_cast<std::uint64_t>(svt_modulus) * 4;

  auto ambient = [&](const Word& w) {
    if (r == 1) return rll_member(w, f);
    return rll_member(interleave(w, r).rows[0], f);
  };
  auto key = [&](const Word& w) {
    const ArrayView a = interleave(w, r);
    std::vector<int> k;
    k.reserve(2 * r);
    k.push_back(static_cast<int>(detail::mod(vt_syndrome(a.rows[0]), row1_modulus)));
    k.push_back(static_cast<int>(a.rows[0].weight() % 4));
    for (std::size_t i = 1; i < r; ++i) {
      k.push_back(static_cast<int>(detail::mod(vt_syndrome(a.rows[i]), svt_modulus)));
      k.push_back(static_cast<int>(a.rows[i].weight() % 4));
    }
    return k;
  };
  auto make = [&](const std::vector<int>& k) {
    std::vector<CtsParams::Row> rows;
    for (std::size_t i = 1; i < r; ++i) rows.push_back({k[2 * i], k[2 * i + 1]});
    Codebook book;
    book.family = CodeFamily::kCts;
    book.t = t;
    book.s = s;
    book.params = CtsParams::make(n, t, s, k[0], k[1], std::move(rows));
    return book;
  };
  return detail::bucket_search(n, limits, tuples, 2 * r, ambient, key, make);
}

}  // namespace burst
