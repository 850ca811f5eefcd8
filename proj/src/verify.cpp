#include "burst/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "burst/bits.hpp"
#include "burst/component_codes.hpp"
#include "burst/construction_31.hpp"
#include "burst/construction_ts.hpp"
#include "burst/error_model.hpp"
#include "burst/errors.hpp"
#include "burst/serialization.hpp"

namespace burst {
namespace {

using nlohmann::json;

class Stopwatch {
 public:
  explicit Stopwatch(VerificationReport& report)
      : report_(report), begin_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    report_.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - begin_)
                          .count();
  }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point begin_;
};

json book_parameters(const Codebook& book) {
  return {{"family", std::string(to_string(book.family))},
          {"n", book.n},
          {"size", book.size()},
          {"params", to_json(book.params)}};
}

void require_uniform_length(const Codebook& book, std::size_t t) {
  for (const Word& w : book.members) {
    if (w.size() != book.n) throw DomainError("codebook words have mixed lengths");
  }
  if (!book.members.empty() && book.n < t) {
    throw DomainError("codeword length " + std::to_string(book.n) + " is below t=" +
                      std::to_string(t));
  }
}

json burst_json(const BurstSpec& spec) {
  return {{"t", spec.t},
          {"s", spec.s},
          {"start", spec.start},
          {"inserted", spec.inserted.to_string()}};
}

bool decoder_supports(CodeFamily family, std::size_t t, std::size_t s,
                      const Codebook& book) {
  switch (family) {
    case CodeFamily::kLev2: return s == 0 && (t == 1 || t == 2);
    case CodeFamily::kCts: return t == book.t && s == book.s;
    default: break;
  }
  const auto [ft, fs] = family_burst(family);
  return ft == t && fs == s;
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

}  // namespace

json VerificationReport::to_json(bool with_timing) const {
  json out = {{"schema", kReportSchema},
              {"check", check},
              {"parameters", parameters},
              {"verdict", passed ? "pass" : "fail"},
              {"counts", counts}};
  json m = json::object();
  for (const auto& [k, v] : metrics) m[k] = std::isfinite(v) ? json(round4(v)) : json(nullptr);
  out["metrics"] = m;
  if (!passed) out["witness"] = witness;
  if (with_timing) out["wall_ms"] = round4(wall_ms);
  return out;
}

BurstDecoder make_decoder(const Codebook& book) {
  const std::size_t n = book.n;
  switch (book.family) {
    case CodeFamily::kVt: {
      const auto p = std::get<VtParams>(book.params);
      return [p, n](const Word& y) { return vt_decode(y, p, n); };
    }
    case CodeFamily::kLev2: {
      const auto p = std::get<Lev2Params>(book.params);
      return [p, n](const Word& y) { return lev2_decode(y, p, n).codeword; };
    }
    case CodeFamily::kC21: {
      const auto p = std::get<C21Params>(book.params);
      return [p, n](const Word& y) { return c21_decode(y, p, n).codeword; };
    }
    case CodeFamily::kC21Rll: {
      const auto p = std::get<C21RllParams>(book.params);
      return [p, n](const Word& y) {
        return c21_decode(y, C21Params{p.a, p.b}, n).codeword;
      };
    }
    case CodeFamily::kCts: {
      const auto p = std::get<CtsParams>(book.params);
      return [p](const Word& y) { return cts_decode(y, p); };
    }
    case CodeFamily::kC31: {
      const auto p = std::get<C31Params>(book.params);
      return [p](const Word& y) { return c31_decode(y, p); };
    }
    case CodeFamily::kSvt21:
      throw ConfigurationError("svt21 decoding needs a location window");
    case CodeFamily::kExplicit:
      break;
  }
  throw ConfigurationError("no decoder for an explicit word set");
}

VerificationReport verify_disjoint(const Codebook& book, std::size_t t, std::size_t s) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "disjoint";
  report.parameters = book_parameters(book);
  report.parameters["t"] = t;
  report.parameters["s"] = s;
  require_uniform_length(book, t);

  std::unordered_map<Word, std::size_t> owner;
  std::uint64_t members = 0;
  for (std::size_t i = 0; i < book.members.size(); ++i) {
    const Ball b = ball(book.members[i], t, s);
    for (const Word& z : b.members) {
      ++members;
      const auto [it, fresh] = owner.emplace(z, i);
      if (!fresh) {
        report.passed = false;
        const Word& first = book.members[it->second];
        const Ball other = ball(first, t, s);
        json shared_all = json::array();
        for (const Word& w : b.members) {
          if (std::binary_search(other.members.begin(), other.members.end(), w)) {
            shared_all.push_back(w.to_string());
          }
        }
        report.witness = {{"first", first.to_string()},
                          {"second", book.members[i].to_string()},
                          {"shared", z.to_string()},
                          {"shared_all", shared_all}};
        report.counts = {{"codewords", book.size()}, {"ball_members", members}};
        return report;
      }
    }
  }
  report.counts = {{"codewords", book.size()}, {"ball_members", members}};
  return report;
}

VerificationReport verify_roundtrip(const Codebook& book, std::size_t t, std::size_t s) {
  if (!decoder_supports(book.family, t, s, book)) {
    throw ConfigurationError("family '" + std::string(to_string(book.family)) +
                             "' does not decode (" + std::to_string(t) + "," +
                             std::to_string(s) + ")-bursts");
  }
  return verify_roundtrip(book, t, s, make_decoder(book));
}

VerificationReport verify_roundtrip(const Codebook& book, std::size_t t, std::size_t s,
                                    const BurstDecoder& decoder) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "roundtrip";
  report.parameters = book_parameters(book);
  report.parameters["t"] = t;
  report.parameters["s"] = s;
  require_uniform_length(book, t);

  std::uint64_t corruptions = 0;
  std::uint64_t ambiguous = 0;
  const auto bursts = book.members.empty() ? std::vector<BurstSpec>{}
                                           : all_bursts(book.n, t, s);
  for (const Word& x : book.members) {
    for (const BurstSpec& spec : bursts) {
      const Word y = apply_burst(x, spec);
      ++corruptions;
      json failure;
      try {
        const Word decoded = decoder(y);
        if (decoded != x) failure = {{"decoded", decoded.to_string()}};
      } catch (const AmbiguityError& e) {
        ++ambiguous;
        failure = {{"error", e.what()}, {"candidates", e.candidates()}};
      } catch (const Error& e) {
        failure = {{"error", e.what()}};
      }
      if (!failure.is_null()) {
        report.passed = false;
        failure["codeword"] = x.to_string();
        failure["burst"] = burst_json(spec);
        failure["received"] = y.to_string();
        report.witness = failure;
        report.counts = {{"codewords", book.size()},
                         {"corruptions", corruptions},
                         {"ambiguous", ambiguous}};
        return report;
      }
    }
  }
  report.counts = {{"codewords", book.size()},
                   {"corruptions", corruptions},
                   {"ambiguous", ambiguous}};
  return report;
}

VerificationReport verify_svt_roundtrip(const Codebook& book) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "svt-roundtrip";
  report.parameters = book_parameters(book);
  const auto* p = std::get_if<Svt21Params>(&book.params);
  if (book.family != CodeFamily::kSvt21 || p == nullptr) {
    throw ConfigurationError("svt round trip needs an svt21 codebook");
  }
  require_uniform_length(book, 2);
  const std::size_t n = book.n;
  const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(p->P), n);

  std::uint64_t corruptions = 0;
  std::uint64_t decodes = 0;
  const auto bursts = book.members.empty() ? std::vector<BurstSpec>{}
                                           : all_bursts(n, 2, 1);
  for (const Word& x : book.members) {
    for (const BurstSpec& spec : bursts) {
      const Word y = apply_burst(x, spec);
      ++corruptions;
      const std::size_t first = spec.start + 1 > width ? spec.start + 1 - width : 1;
      const std::size_t last = std::min(spec.start, n - width + 1);
      for (std::size_t lo = first; lo <= last; ++lo) {
        const Interval window{lo, lo + width - 1};
        ++decodes;
        json failure;
        try {
          const Word decoded = svt21_decode(y, *p, window, n);
          if (decoded != x) failure = {{"decoded", decoded.to_string()}};
        } catch (const Error& e) {
          failure = {{"error", e.what()}};
        }
        if (!failure.is_null()) {
          report.passed = false;
          failure["codeword"] = x.to_string();
          failure["burst"] = burst_json(spec);
          failure["received"] = y.to_string();
          failure["window"] = {window.lo, window.hi};
          report.witness = failure;
          report.counts = {{"codewords", book.size()},
                           {"corruptions", corruptions},
                           {"decodes", decodes}};
          return report;
        }
      }
    }
  }
  report.counts = {
      {"codewords", book.size()}, {"corruptions", corruptions}, {"decodes", decodes}};
  report.metrics["redundancy"] = book.redundancy();
  report.metrics["redundancy_ceiling"] = std::log2(static_cast<double>(p->P)) + 3.0;
  return report;
}

VerificationReport verify_equivalence(const Codebook& book, std::size_t t,
                                      std::size_t s) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "equivalence";
  report.parameters = book_parameters(book);
  report.parameters["t"] = t;
  report.parameters["s"] = s;
  const VerificationReport forward = verify_disjoint(book, t, s);
  const VerificationReport swapped = verify_disjoint(book, s, t);
  report.passed = forward.passed == swapped.passed;
  report.counts = {{"forward_pass", forward.passed ? 1u : 0u},
                   {"swapped_pass", swapped.passed ? 1u : 0u},
                   {"codewords", book.size()}};
  if (!report.passed) {
    report.witness = {{"forward", forward.passed ? json(nullptr) : forward.witness},
                      {"swapped", swapped.passed ? json(nullptr) : swapped.witness}};
  }
  return report;
}

VerificationReport verify_ball_laws(const BallLawOptions& options) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "ball-laws";
  report.parameters = {{"n_min", options.n_min},
                       {"n_max", options.n_max},
                       {"t_max", options.t_max},
                       {"s_max", options.s_max}};
  if (options.n_max > options.guard) {
    throw ResourceError("ball-law sweep up to n=" + std::to_string(options.n_max) +
                        " refused (guard n <= " + std::to_string(options.guard) + ")");
  }

  std::uint64_t words = 0, balls = 0, parts = 0, formula_checks = 0, formula_skips = 0;
  auto fail = [&](const Word& x, std::size_t t, std::size_t s, const std::string& why,
                  json extra) {
    report.passed = false;
    extra["center"] = x.to_string();
    extra["t"] = t;
    extra["s"] = s;
    extra["reason"] = why;
    report.witness = std::move(extra);
  };

  for (std::size_t n = std::max<std::size_t>(options.n_min, 1);
       n <= options.n_max && report.passed; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n) && report.passed; ++v) {
      const Word x(v, n);
      ++words;
      std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> refined;
      for (std::size_t t = 1; t <= options.t_max && report.passed; ++t) {
        for (std::size_t s = 1; s <= options.s_max && report.passed; ++s) {
          if (std::max(t, s) > n) continue;
          const Ball b = ball(x, t, s);
          ++balls;
          const std::uint64_t expected = ball_size_formula(n, t, s);
          if (b.size() != expected) {
            fail(x, t, s, "ball size differs from (n-t+2)*2^(s-1)",
                 {{"size", b.size()}, {"formula", expected}});
            break;
          }

          std::vector<Word> joined;
          for (const auto& [k, l] : ball_partition(t, s)) {
            auto it = refined.find({k, l});
            if (it == refined.end()) {
              it = refined.emplace(std::pair{k, l}, refined_ball(x, k, l)).first;
              ++parts;
              try {
                const std::uint64_t closed = refined_ball_size(x, k, l);
                ++formula_checks;
                if (closed != it->second.size()) {
                  fail(x, t, s, "refined size differs from its closed form",
                       {{"k", k}, {"l", l}, {"size", it->second.size()},
                        {"formula", closed}});
                  break;
                }
              } catch (const DomainError&) {
                ++formula_skips;
              }
            }
            joined.insert(joined.end(), it->second.begin(), it->second.end());
          }
          if (!report.passed) break;

          std::sort(joined.begin(), joined.end());
          const auto dup = std::adjacent_find(joined.begin(), joined.end());
          if (dup != joined.end()) {
            fail(x, t, s, "refined parts overlap", {{"member", dup->to_string()}});
            break;
          }
          if (joined != b.members) {
            std::vector<Word> missing;
            std::set_symmetric_difference(joined.begin(), joined.end(),
                                          b.members.begin(), b.members.end(),
                                          std::back_inserter(missing));
            fail(x, t, s, "refined parts do not cover the ball",
                 {{"member", missing.empty() ? "" : missing.front().to_string()}});
            break;
          }
        }
      }
    }
  }
  report.counts = {{"words", words},
                   {"balls", balls},
                   {"refined_parts", parts},
                   {"formula_checks", formula_checks},
                   {"formula_skipped", formula_skips}};
  return report;
}

VerificationReport bound_report(const Codebook& book) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "bound";
  report.parameters = book_parameters(book);
  report.parameters["t"] = book.t;
  report.parameters["s"] = book.s;
  report.counts["size"] = book.size();
  if (book.members.empty()) return report;

  const std::uint64_t bound = sphere_packing_bound(book.n, book.t, book.s);
  report.counts["bound"] = bound;
  report.passed = book.size() <= bound;
  const double floor_redundancy = redundancy_lower_bound(book.n, book.t, book.s);
  report.metrics["redundancy"] = book.redundancy();
  report.metrics["redundancy_floor"] = floor_redundancy;
  report.metrics["gap"] = book.redundancy() - floor_redundancy;
  if (!report.passed) {
    report.witness = {{"size", book.size()}, {"bound", bound}};
  }
  return report;
}

VerificationReport verify_c31_classification(const Codebook& book) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "c31-classification";
  report.parameters = book_parameters(book);
  const auto* p = std::get_if<C31Params>(&book.params);
  if (p == nullptr) throw ConfigurationError("classification check needs a c31 codebook");
  require_uniform_length(book, 3);

  std::map<std::string, std::uint64_t> counts;
  std::uint64_t corruptions = 0, ambiguous = 0, runs_decisive = 0;
  const auto bursts = book.members.empty() ? std::vector<BurstSpec>{}
                                           : all_bursts(book.n, 3, 1);
  for (const Word& x : book.members) {
    const std::vector<Word> two_deletions = refined_ball(x, 2, 0);
    for (const BurstSpec& spec : bursts) {
      const Word y = apply_burst(x, spec);
      ++corruptions;
      const std::size_t i = spec.start - 1;
      const int ins = spec.inserted[0];
      ErrorClass truth = ErrorClass::kTwoBurstDeletion;
      if (x[i] == x[i + 2] && x[i] != ins) {
        const bool middle = x[i + 1] != x[i];
        truth = x[i] == 0 ? (middle ? ErrorClass::kPattern010To1 : ErrorClass::kPattern000To1)
                          : (middle ? ErrorClass::kPattern101To0 : ErrorClass::kPattern111To0);
      }
      const bool is_two_deletion =
          std::binary_search(two_deletions.begin(), two_deletions.end(), y);

      json failure;
      try {
        const ErrorClass got = classify_31(y, *p);
        ++counts[std::string(to_string(got))];
        if (got != truth) {
          failure = {{"reason", "classification differs from the true pattern"},
                     {"classified", to_string(got)},
                     {"truth", to_string(truth)}};
        } else if ((got == ErrorClass::kTwoBurstDeletion) != is_two_deletion) {
          failure = {{"reason", "two-burst-deletion class disagrees with B'_{2,0}"},
                     {"classified", to_string(got)}};
        } else {
          const C31DecodeTrace trace = c31_decode_traced(y, *p);
          if (trace.survivors_without_runs > 1) ++runs_decisive;
          if (trace.codeword != x) {
            failure = {{"reason", "decoded a different codeword"},
                       {"decoded", trace.codeword.to_string()}};
          }
        }
      } catch (const AmbiguityError& e) {
        ++ambiguous;
        failure = {{"reason", e.what()}, {"candidates", e.candidates()}};
      } catch (const Error& e) {
        failure = {{"reason", e.what()}};
      }
      if (!failure.is_null()) {
        report.passed = false;
        failure["codeword"] = x.to_string();
        failure["burst"] = burst_json(spec);
        failure["received"] = y.to_string();
        report.witness = failure;
        break;
      }
    }
    if (!report.passed) break;
  }
  report.counts = {{"codewords", book.size()},
                   {"corruptions", corruptions},
                   {"ambiguous", ambiguous},
                   {"run_constraint_decisive", runs_decisive}};
  for (const auto& [name, c] : counts) report.counts["class:" + name] = c;
  return report;
}

VerificationReport verify_cts_structure(const Codebook& book) {
  VerificationReport report;
  Stopwatch watch(report);
  report.check = "cts-structure";
  report.parameters = book_parameters(book);
  const auto* p = std::get_if<CtsParams>(&book.params);
  if (p == nullptr) throw ConfigurationError("structure check needs a cts codebook");
  require_uniform_length(book, p->t());

  const std::size_t r = p->row_count();
  std::uint64_t corruptions = 0, row_checks = 0, window_checks = 0;
  const auto bursts = book.members.empty() ? std::vector<BurstSpec>{}
                                           : all_bursts(book.n, p->t(), p->s());
  for (const Word& x : book.members) {
    const ArrayView rows_x = interleave(x, r);
    std::vector<Ball> row_balls;
    for (const Word& row : rows_x.rows) row_balls.push_back(ball(row, 2, 1));

    for (const BurstSpec& spec : bursts) {
      const Word y = apply_burst(x, spec);
      ++corruptions;
      json failure;
      const ArrayView rows_y = interleave(y, r);
      for (std::size_t i = 0; i < r && failure.is_null(); ++i) {
        ++row_checks;
        const auto& members = row_balls[i].members;
        if (!std::binary_search(members.begin(), members.end(), rows_y.rows[i])) {
          failure = {{"reason", "row is not one deletion or (2,1)-burst away"},
                     {"row", i + 1}};
        }
      }
      if (failure.is_null()) {
        try {
          const CtsDecodeTrace trace = cts_decode_traced(y, *p);
          for (std::size_t row = 2; row <= r && failure.is_null(); ++row) {
            // First deleted coordinate that falls in this row.
            std::size_t q = spec.start;
            while ((q - 1) % r != row - 1) ++q;
            const std::size_t column = (q - 1) / r + 1;
            ++window_checks;
            const Interval& w = trace.windows[row - 2];
            if (!w.contains(column)) {
              failure = {{"reason", "row error starts outside the decoder window"},
                         {"row", row},
                         {"column", column},
                         {"window", {w.lo, w.hi}}};
            }
          }
          if (failure.is_null() && trace.codeword != x) {
            failure = {{"reason", "decoded a different codeword"},
                       {"decoded", trace.codeword.to_string()}};
          }
        } catch (const AmbiguityError& e) {
          failure = {{"reason", e.what()}, {"candidates", e.candidates()}};
        } catch (const Error& e) {
          failure = {{"reason", e.what()}};
        }
      }
      if (!failure.is_null()) {
        report.passed = false;
        failure["codeword"] = x.to_string();
        failure["burst"] = burst_json(spec);
        failure["received"] = y.to_string();
        report.witness = failure;
        break;
      }
    }
    if (!report.passed) break;
  }
  report.counts = {{"codewords", book.size()},
                   {"corruptions", corruptions},
                   {"row_checks", row_checks},
                   {"window_checks", window_checks}};
  return report;
}

}  // namespace burst
