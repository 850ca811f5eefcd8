#include "burst/params.hpp"

#include <string>

#include "burst/bits.hpp"
#include "burst/errors.hpp"

namespace burst {
namespace {

void check_residue(const std::string& name, int value, long modulus) {
  if (value < 0 || value >= modulus) {
    throw DomainError("residue " + name + "=" + std::to_string(value) +
                      " outside [0, " + std::to_string(modulus) + ")");
  }
}

}  // namespace

CtsParams CtsParams::make(std::size_t n, std::size_t t, std::size_t s, int a, int b,
                          std::vector<Row> rows) {
  if (s < 1 || t < 2 * s) {
    throw DomainError("array construction needs t >= 2s >= 2 (t=" + std::to_string(t) +
                      ", s=" + std::to_string(s) + ")");
  }
  const std::size_t r = t - s;
  if (n == 0 || n % r != 0) {
    throw DomainError("array construction needs (t-s) | n (t-s=" + std::to_string(r) +
                      ", n=" + std::to_string(n) + ")");
  }
  if (rows.size() != r - 1) {
    throw DomainError("expected " + std::to_string(r - 1) +
                      " row residue pairs, got " + std::to_string(rows.size()));
  }
  CtsParams p;
  p.n_ = n;
  p.t_ = t;
  p.s_ = s;
  p.a_ = a;
  p.b_ = b;
  const std::size_t m = n / r;
  p.f_ = static_cast<int>(ceil_log2(m)) + 3;
  check_residue("a", a, 2 * static_cast<long>(m) - 1);
  check_residue("b", b, 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_residue("c" + std::to_string(i + 2), rows[i].c, 2 * (p.f_ + 1) - 1);
    check_residue("d" + std::to_string(i + 2), rows[i].d, 4);
  }
  p.rows_ = std::move(rows);
  return p;
}

void validate(const C31Params& p) {
  if (p.n == 0 || p.n % 2 != 0) {
    throw DomainError("C31 needs an even length n > 0 (n=" + std::to_string(p.n) + ")");
  }
  check_residue("a", p.a, 4 * static_cast<long>(p.n));
  check_residue("b", p.b, 4);
  check_residue("c", p.c, 4);
  check_residue("d", p.d, 5);
}

namespace {

struct Describer {
  std::string operator()(const NoParams&) const { return "-"; }
  std::string operator()(const VtParams& p) const { return "a=" + std::to_string(p.a); }
  std::string operator()(const Lev2Params& p) const { return "a=" + std::to_string(p.a); }
  std::string operator()(const C21Params& p) const {
    return "a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b);
  }
  std::string operator()(const C21RllParams& p) const {
    return "a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b) +
           ",f=" + std::to_string(p.f);
  }
  std::string operator()(const Svt21Params& p) const {
    return "c=" + std::to_string(p.c) + ",d=" + std::to_string(p.d) +
           ",P=" + std::to_string(p.P);
  }
  std::string operator()(const CtsParams& p) const {
    std::string out = "a=" + std::to_string(p.a()) + ",b=" + std::to_string(p.b());
    for (std::size_t i = 2; i <= p.row_count(); ++i) {
      out += ",c" + std::to_string(i) + "=" + std::to_string(p.row(i).c) +
             ",d" + std::to_string(i) + "=" + std::to_string(p.row(i).d);
    }
    return out + ",f=" + std::to_string(p.rll_bound()) +
           ",P=" + std::to_string(p.window_bound());
  }
  std::string operator()(const C31Params& p) const {
    return "a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b) +
           ",c=" + std::to_string(p.c) + ",d=" + std::to_string(p.d);
  }
};

}  // namespace

std::string describe(const SyndromeParams& params) {
  return std::visit(Describer{}, params);
}

}  // namespace burst
