#include "burst/component_codes.hpp"

#include <string>

#include "burst/bits.hpp"
#include "burst/errors.hpp"
#include "candidates.hpp"

namespace burst {

using detail::mod;

std::string_view to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::kNoError: return "no-error";
    case ErrorClass::kSingleDeletion: return "single-deletion";
    case ErrorClass::kTwoBurstDeletion: return "two-burst-deletion";
    case ErrorClass::kMerge00To1: return "merge-00->1";
    case ErrorClass::kMerge11To0: return "merge-11->0";
    case ErrorClass::kPattern000To1: return "pattern-000->1";
    case ErrorClass::kPattern010To1: return "pattern-010->1";
    case ErrorClass::kPattern111To0: return "pattern-111->0";
    case ErrorClass::kPattern101To0: return "pattern-101->0";
  }
  return "unknown";
}

namespace {

void check_residue(const char* name, int value, std::int64_t modulus) {
  if (value < 0 || value >= modulus) {
    throw DomainError(std::string("residue ") + name + "=" + std::to_string(value) +
                      " outside [0, " + std::to_string(modulus) + ")");
  }
}

void check_received_length(const Word& y, std::size_t expected, const char* code) {
  if (y.size() != expected) {
    throw DomainError(std::string(code) + ": received word has length " +
                      std::to_string(y.size()) + ", expected " +
                      std::to_string(expected));
  }
}

std::int64_t n64(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

void validate(VtParams p, std::size_t n) { check_residue("a", p.a, n64(n) + 1); }

void validate(Lev2Params p, std::size_t n) {
  if (n == 0) throw DomainError("Levenshtein code needs n >= 1");
  check_residue("a", p.a, 2 * n64(n));
}

void validate(C21Params p, std::size_t n) {
  if (n == 0) throw DomainError("(2,1)-burst code needs n >= 1");
  check_residue("a", p.a, 2 * n64(n) - 1);
  check_residue("b", p.b, 4);
}

void validate(C21RllParams p, std::size_t n) {
  validate(C21Params{p.a, p.b}, n);
  if (p.f < 1) throw DomainError("run-length bound f must be >= 1");
}

void validate(Svt21Params p, std::size_t /*n*/) {
  if (p.P < 1) throw DomainError("window bound P must be >= 1");
  check_residue("c", p.c, 2 * std::int64_t{p.P} - 1);
  check_residue("d", p.d, 4);
}

// --- VT ------------------------------------------------------------------

bool vt_member(const Word& x, VtParams p) {
  return mod(vt_syndrome(x), n64(x.size()) + 1) == p.a;
}

Word vt_decode(const Word& y, VtParams p, std::size_t n) {
  validate(p, n);
  if (n == 0) throw DomainError("VT decode needs n >= 1");
  check_received_length(y, n - 1, "VT");
  const auto alive = detail::survivors(detail::insertion_preimages(y, 1),
                                       [&](const Word& x) { return vt_member(x, p); });
  return detail::pick_unique(alive, y, "VT");
}

// --- Levenshtein <=2-burst -------------------------------------------------

bool lev2_member(const Word& x, Lev2Params p) {
  return !x.empty() && mod(rsyn0(x), 2 * n64(x.size())) == p.a;
}

DecodeOutcome lev2_decode(const Word& y, Lev2Params p, std::size_t n) {
  validate(p, n);
  if (y.size() > n || y.size() + 2 < n) {
    throw DomainError("Levenshtein decode: received length " +
                      std::to_string(y.size()) + " is not in {n-2, n-1, n}");
  }
  const std::size_t deleted = n - y.size();
  if (deleted == 0) {
    if (!lev2_member(y, p)) {
      throw DecodeFailure("Levenshtein: length-n word " + y.to_string() +
                          " is not a codeword");
    }
    return {y, ErrorClass::kNoError, std::nullopt};
  }
  const auto alive =
      detail::survivors(detail::insertion_preimages(y, deleted),
                        [&](const Word& x) { return lev2_member(x, p); });
  DecodeOutcome out;
  out.codeword = detail::pick_unique(alive, y, "Levenshtein");
  if (deleted == 1) {
    out.classification = ErrorClass::kSingleDeletion;
    const auto [lo, hi] = detail::deletion_run(out.codeword, y);
    out.location = Interval{lo, hi};
  } else {
    out.classification = ErrorClass::kTwoBurstDeletion;
    for (std::size_t q = 0; q + 2 <= n; ++q) {
      if (out.codeword.erased(q, 2) == y) {
        out.location = Interval{q + 1, q + 2};
        break;
      }
    }
  }
  return out;
}

// --- (2,1)-burst ---------------------------------------------------------

bool c21_member(const Word& x, C21Params p) {
  if (x.empty()) return false;
  return mod(vt_syndrome(x), 2 * n64(x.size()) - 1) == p.a &&
         mod(n64(x.weight()), 4) == p.b;
}

DecodeOutcome c21_decode(const Word& y, C21Params p, std::size_t n) {
  validate(p, n);
  if (n < 2) throw DomainError("(2,1)-burst decode needs n >= 2");
  check_received_length(y, n - 1, "(2,1)-burst");

  // Every (2,1)-burst preimage: some y_i stands for an arbitrary pair.
  std::vector<Word> candidates;
  candidates.reserve(4 * y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::uint64_t v = 0; v < 4; ++v) {
      candidates.push_back(y.replaced(i, 1, Word(v, 2)));
    }
  }
  const auto alive = detail::survivors(
      std::move(candidates), [&](const Word& x) { return c21_member(x, p); });

  DecodeOutcome out;
  out.codeword = detail::pick_unique(alive, y, "(2,1)-burst");
  const Word& x = out.codeword;

  const std::int64_t delta = mod(p.b - n64(y.weight()), 4);
  if (delta == 3 || delta == 2) {
    out.classification = delta == 3 ? ErrorClass::kMerge00To1 : ErrorClass::kMerge11To0;
    const int merged = delta == 3 ? 0 : 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (x[i] == merged && x[i + 1] == merged &&
          x.replaced(i, 2, Word(1 - merged, 1)) == y) {
        out.location = Interval{i + 1, i + 2};
        break;
      }
    }
  } else {
    out.classification = ErrorClass::kSingleDeletion;
    const auto [lo, hi] = detail::deletion_run(x, y);
    out.location = Interval{lo, hi};
  }
  return out;
}

// --- (2,1)-burst SVT -----------------------------------------------------

bool svt21_member(const Word& x, Svt21Params p) {
  return mod(vt_syndrome(x), 2 * std::int64_t{p.P} - 1) == p.c &&
         mod(n64(x.weight()), 4) == p.d;
}

Word svt21_decode(const Word& y, Svt21Params p, Interval window, std::size_t n) {
  validate(p, n);
  if (n < 2) throw DomainError("(2,1)-burst SVT decode needs n >= 2");
  check_received_length(y, n - 1, "(2,1)-burst SVT");
  if (window.lo < 1 || window.hi > n || window.lo > window.hi) {
    throw DomainError("window [" + std::to_string(window.lo) + ", " +
                      std::to_string(window.hi) + "] does not fit in [1, " +
                      std::to_string(n) + "]");
  }
  if (window.length() > static_cast<std::size_t>(p.P)) {
    throw DomainError("window of length " + std::to_string(window.length()) +
                      " exceeds P=" + std::to_string(p.P));
  }

  std::vector<Word> candidates;
  for (std::size_t i = window.lo; i <= window.hi; ++i) {
    // A (2,1)-burst starting at coordinate i.
    if (i <= n - 1) {
      for (std::uint64_t v = 0; v < 4; ++v) {
        candidates.push_back(y.replaced(i - 1, 1, Word(v, 2)));
      }
    }
    // A deletion of coordinate i.
    for (std::uint64_t v = 0; v < 2; ++v) {
      candidates.push_back(y.inserted(i - 1, Word(v, 1)));
    }
  }
  const auto alive = detail::survivors(
      std::move(candidates), [&](const Word& x) { return svt21_member(x, p); });
  return detail::pick_unique(alive, y, "(2,1)-burst SVT");
}

// --- RLL -----------------------------------------------------------------

int rll_max_run(const Word& x) { return max_run(x); }

bool rll_member(const Word& x, int f) { return max_run(x) <= f; }

bool c21rll_member(const Word& x, C21RllParams p) {
  return rll_member(x, p.f) && c21_member(x, C21Params{p.a, p.b});
}

int default_rll_bound(std::size_t n) { return static_cast<int>(ceil_log2(n)) + 3; }

}  // namespace burst
