#ifndef BURST_SIMULATE_HPP
#define BURST_SIMULATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "json.hpp"

#include "burst/codebook.hpp"
#include "burst/verify.hpp"

namespace burst {

/// Uniform integer in [0, bound) drawn from a 64-bit Mersenne Twister by
/// rejection. std::uniform_int_distribution is not used because its output is
/// implementation defined. Throws DomainError when bound is 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct SimConfig {
  CodeFamily family = CodeFamily::kC31;
  std::size_t n = 0;
  std::size_t t = 0;  // 0 takes the family's own burst
  std::size_t s = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SimResult {
  SimConfig config;
  Codebook codebook;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  /// FNV-1a over every (codeword, burst, received) triple in trial order.
  std::uint64_t trace_digest = 0;
  nlohmann::json witness;  // first failure, null when none

  bool all_decoded() const { return failures == 0; }
  /// Deterministic multi-line summary; identical configs give identical text.
  std::string summary() const;
};

/// Per trial: a uniform codeword of the family's best-bucket codebook, a
/// uniform burst start, and a uniform inserted word, decoded with
/// make_decoder. Throws ConfigurationError for families without a standalone
/// decoder, ResourceError when the codebook search exceeds its guard.
SimResult simulate(const SimConfig& config, const SearchLimits& limits = {});

/// Runs the configured trials against an already chosen codebook and decoder.
SimResult simulate(const SimConfig& config, const Codebook& book,
                   const BurstDecoder& decoder);

}  // namespace burst

#endif  // BURST_SIMULATE_HPP
