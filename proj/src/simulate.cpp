#include "burst/simulate.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "burst/error_model.hpp"
#include "burst/errors.hpp"
#include "burst/params.hpp"

namespace burst {
namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, const std::string& text) {
  for (unsigned char c : text) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0xff;  // field separator
  h *= kFnvPrime;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below needs a positive bound");
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

std::string SimResult::summary() const {
  std::ostringstream out;
  char red[32];
  std::snprintf(red, sizeof red, "%.4f", codebook.redundancy());
  out << "family " << to_string(config.family) << '\n'
      << "n " << codebook.n << '\n'
      << "burst t=" << codebook.t << " s=" << codebook.s << '\n'
      << "params " << describe(codebook.params) << '\n'
      << "codebook_size " << codebook.size() << '\n'
      << "redundancy " << red << '\n'
      << "seed " << config.seed << '\n'
      << "trials " << config.trials << '\n'
      << "success " << successes << '/' << config.trials << '\n'
      << "digest " << hex64(trace_digest) << '\n';
  return out.str();
}

SimResult simulate(const SimConfig& config, const SearchLimits& limits) {
  SearchOptions options;
  options.limits = limits;
  std::size_t t = config.t;
  std::size_t s = config.s;
  if (config.family != CodeFamily::kCts && t == 0 && s == 0) {
    std::tie(t, s) = family_burst(config.family);
  }
  if (config.family == CodeFamily::kCts && (t == 0 || s == 0)) {
    throw DomainError("cts simulation needs t and s");
  }
  Codebook book = search_family(config.family, config.n, t, s, options).codebook;
  // lev2 codebooks are declared for (2,0) but also correct single deletions.
  if (config.family == CodeFamily::kLev2 && t == 1 && s == 0) book.t = 1;
  if (config.family != CodeFamily::kCts && config.family != CodeFamily::kLev2) {
    const auto [ft, fs] = family_burst(config.family);
    if (ft != t || fs != s) {
      throw ConfigurationError("family '" + std::string(to_string(config.family)) +
                               "' does not decode (" + std::to_string(t) + "," +
                               std::to_string(s) + ")-bursts");
    }
  }
  return simulate(config, book, make_decoder(book));
}

SimResult simulate(const SimConfig& config, const Codebook& book,
                   const BurstDecoder& decoder) {
  SimResult result;
  result.config = config;
  result.codebook = book;
  result.trace_digest = kFnvOffset;
  if (book.members.empty()) {
    throw DomainError("cannot simulate over an empty codebook");
  }
  const std::size_t n = book.n;
  const std::size_t t = book.t;
  const std::size_t s = book.s;
  if (t > n) throw DomainError("burst length exceeds n");

  std::mt19937_64 rng(config.seed);
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    const Word& x = book.members[uniform_below(rng, book.size())];
    BurstSpec spec;
    spec.t = t;
    spec.s = s;
    spec.start = 1 + uniform_below(rng, n - t + 1);
    spec.inserted = Word(s == 0 ? 0 : uniform_below(rng, std::uint64_t{1} << s), s);
    const Word y = apply_burst(x, spec);

    fnv_mix(result.trace_digest, x.to_string());
    fnv_mix(result.trace_digest, std::to_string(spec.start));
    fnv_mix(result.trace_digest, spec.inserted.to_string());

    nlohmann::json failure;
    try {
      const Word decoded = decoder(y);
      if (decoded != x) failure = {{"decoded", decoded.to_string()}};
    } catch (const Error& e) {
      failure = {{"error", e.what()}};
    }
    if (failure.is_null()) {
      ++result.successes;
    } else {
      ++result.failures;
      if (result.witness.is_null()) {
        failure["trial"] = trial;
        failure["codeword"] = x.to_string();
        failure["burst"] = {{"t", t}, {"s", s}, {"start", spec.start},
                            {"inserted", spec.inserted.to_string()}};
        failure["received"] = y.to_string();
        result.witness = failure;
      }
    }
  }
  return result;
}

}  // namespace burst
