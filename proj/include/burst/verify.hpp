#ifndef BURST_VERIFY_HPP
#define BURST_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "json.hpp"

#include "burst/codebook.hpp"
#include "burst/word.hpp"

namespace burst {

inline constexpr const char* kReportSchema = "burst.report/1";

/// Outcome of one exhaustive check. A failing report always carries a
/// witness that reproduces the failure when the single case is re-run.
struct VerificationReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  bool passed = true;
  nlohmann::json witness;  // null on pass
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, double> metrics;
  double wall_ms = 0.0;

  /// One JSON object; wall time is included only on request so that reports
  /// of identical runs compare equal.
  nlohmann::json to_json(bool with_timing = false) const;
};

using BurstDecoder = std::function<Word(const Word&)>;

/// Decoder for a codebook's family and parameters. Throws ConfigurationError
/// for families that need side information (svt21) or carry no parameters.
BurstDecoder make_decoder(const Codebook& book);

/// Pass iff the (t,s)-balls of distinct codewords are pairwise disjoint.
/// Witness: {"first", "second", "shared", "shared_all"}, where "shared" is the
/// smallest word in both balls and "shared_all" is the whole intersection. Throws DomainError on mixed
/// lengths or n < t.
VerificationReport verify_disjoint(const Codebook& book, std::size_t t, std::size_t s);

/// Pass iff decode(apply_burst(x, spec)) == x for every codeword and every
/// burst. Stops at the first failure. The one-argument form builds the
/// decoder with make_decoder and throws ConfigurationError when (t,s) is not
/// what the family corrects.
VerificationReport verify_roundtrip(const Codebook& book, std::size_t t, std::size_t s);
VerificationReport verify_roundtrip(const Codebook& book, std::size_t t, std::size_t s,
                                    const BurstDecoder& decoder);

/// Round trip for an svt21 codebook: every (2,1)-burst, decoded with every
/// length-min(P, n) window inside [1, n] that contains the burst start.
VerificationReport verify_svt_roundtrip(const Codebook& book);

/// Pass iff (t,s)-disjointness and (s,t)-disjointness give the same verdict.
VerificationReport verify_equivalence(const Codebook& book, std::size_t t, std::size_t s);

struct BallLawOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 10;
  std::size_t t_max = 4;
  std::size_t s_max = 4;
  std::size_t guard = 14;
};

/// For every word of every length in [n_min, n_max] and every 1 <= t <= t_max,
/// 1 <= s <= s_max with max(t,s) <= n: the ball has (n-t+2)*2^(s-1) members,
/// equals the disjoint union of its refined parts, and each part matches its
/// closed form wherever the divisibility precondition holds. Throws
/// ResourceError when n_max exceeds the guard.
VerificationReport verify_ball_laws(const BallLawOptions& options);

/// Asserts |C| <= sphere_packing_bound(n, t, s) and records the redundancy gap
/// to log2(n-m+2) + m - 1.
VerificationReport bound_report(const Codebook& book);

/// For a c31 codebook: the delta classification of every (3,1)-corruption
/// equals the true error pattern, two-burst-deletion exactly when the
/// corruption is a two-burst deletion, and no decode is ambiguous.
VerificationReport verify_c31_classification(const Codebook& book);

/// For a cts codebook and every burst: each row of the corrupted array is a
/// single deletion or (2,1)-burst of the codeword's row, the true start of
/// every row error lies in the decoder's column window, and the decode
/// round-trips.
VerificationReport verify_cts_structure(const Codebook& book);

}  // namespace burst

#endif  // BURST_VERIFY_HPP
