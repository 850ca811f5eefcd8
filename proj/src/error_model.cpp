#include "burst/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "burst/bits.hpp"
#include "burst/errors.hpp"

namespace burst {
namespace {

void sort_unique(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::uint64_t pow2(std::size_t e) {
  if (e >= 64) throw DomainError("2^" + std::to_string(e) + " overflows 64 bits");
  return std::uint64_t{1} << e;
}

}  // namespace

Word apply_burst(const Word& x, const BurstSpec& spec) {
  if (spec.t > x.size() || spec.start < 1 || spec.start > x.size() - spec.t + 1) {
    throw DomainError("burst start " + std::to_string(spec.start) + " outside [1, " +
                      std::to_string(x.size() + 1 - std::min(spec.t, x.size())) +
                      "] for n=" + std::to_string(x.size()) +
                      ", t=" + std::to_string(spec.t));
  }
  if (spec.inserted.size() != spec.s) {
    throw DomainError("inserted word has length " +
                      std::to_string(spec.inserted.size()) + ", expected s=" +
                      std::to_string(spec.s));
  }
  return x.replaced(spec.start - 1, spec.t, spec.inserted);
}

std::vector<BurstSpec> all_bursts(std::size_t n, std::size_t t, std::size_t s) {
  if (t > n) throw DomainError("t exceeds the word length");
  const std::uint64_t patterns = pow2(s);
  std::vector<BurstSpec> out;
  out.reserve((n - t + 1) * patterns);
  for (std::size_t start = 1; start <= n - t + 1; ++start) {
    for (std::uint64_t v = 0; v < patterns; ++v) {
      out.push_back({t, s, start, Word(v, s)});
    }
  }
  return out;
}

Ball ball(const Word& x, std::size_t t, std::size_t s) {
  const std::size_t n = x.size();
  if (t > n) {
    throw DomainError("ball needs t <= n (t=" + std::to_string(t) +
                      ", n=" + std::to_string(n) + ")");
  }
  const std::uint64_t patterns = pow2(s);
  Ball b{x, t, s, {}};
  b.members.reserve((n - t + 1) * patterns);
  for (std::size_t p = 0; p + t <= n; ++p) {
    for (std::uint64_t v = 0; v < patterns; ++v) {
      b.members.push_back(x.replaced(p, t, Word(v, s)));
    }
  }
  sort_unique(b.members);
  return b;
}

std::vector<Word> refined_ball(const Word& x, std::size_t k, std::size_t l) {
  const std::size_t n = x.size();
  if (k > n) {
    throw DomainError("refined ball needs k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  const std::uint64_t patterns = pow2(l);
  const bool constrained = k >= 1 && l >= 1;
  std::vector<Word> out;
  for (std::size_t p = 0; p + k <= n; ++p) {
    for (std::uint64_t v = 0; v < patterns; ++v) {
      const Word y(v, l);
      if (constrained && (y[0] == x[p] || y[l - 1] == x[p + k - 1])) continue;
      out.push_back(x.replaced(p, k, y));
    }
  }
  sort_unique(out);
  return out;
}

std::uint64_t refined_ball_size(const Word& x, std::size_t k, std::size_t l) {
  const std::size_t n = x.size();
  if (k > n) {
    throw DomainError("refined ball size needs k <= n");
  }
  if (l == 0) {
    if (k == 0) return 1;
    if (n % k != 0) {
      throw DomainError("burst-deletion size formula needs k | n (k=" +
                        std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    std::uint64_t size = 1;
    for (const Word& row : interleave(x, k).rows) {
      size += static_cast<std::uint64_t>(run_count(row) - 1);
    }
    return size;
  }
  if (k == 0) {
    return n * pow2(l - 1) + pow2(l);
  }
  if (l == 1) {
    if (k == 1) return n;
    if (n % (k - 1) != 0) {
      throw DomainError("(k,1) size formula needs (k-1) | n (k=" + std::to_string(k) +
                        ", n=" + std::to_string(n) + ")");
    }
    std::uint64_t runs = 0;
    for (const Word& row : interleave(x, k - 1).rows) {
      runs += static_cast<std::uint64_t>(run_count(row));
    }
    return n - runs;
  }
  return (n - k + 1) * pow2(l - 2);
}

std::vector<std::pair<std::size_t, std::size_t>> ball_partition(std::size_t t,
                                                                std::size_t s) {
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  if (t >= s) {
    for (std::size_t l = 0; l <= s; ++l) parts.emplace_back(t - s + l, l);
  } else {
    for (std::size_t k = 0; k <= t; ++k) parts.emplace_back(k, s - t + k);
  }
  return parts;
}

std::uint64_t ball_size_formula(std::size_t n, std::size_t t, std::size_t s) {
  if (s < 1) throw DomainError("ball size formula needs s >= 1");
  if (n < std::max(t, s)) throw DomainError("ball size formula needs n >= max(t, s)");
  return (n - t + 2) * pow2(s - 1);
}

std::uint64_t sphere_packing_bound_raw(std::size_t n, std::size_t t) {
  if (n < t) throw DomainError("sphere-packing bound needs n >= t");
  return pow2(n - t + 1) / (n - t + 2);
}

std::uint64_t sphere_packing_bound(std::size_t n, std::size_t t, std::size_t s) {
  if (n < std::max(t, s)) throw DomainError("sphere-packing bound needs n >= max(t, s)");
  return sphere_packing_bound_raw(n, std::max(t, s));
}

double redundancy_lower_bound(std::size_t n, std::size_t t, std::size_t s) {
  if (n < std::max(t, s)) throw DomainError("redundancy bound needs n >= max(t, s)");
  const std::size_t m = std::max(t, s);
  return std::log2(static_cast<double>(n - m + 2)) + static_cast<double>(m) - 1.0;
}

}  // namespace burst
