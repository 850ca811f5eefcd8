#ifndef BURST_PARAMS_HPP
#define BURST_PARAMS_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace burst {

/// VT_a(n): VT(x) = a (mod n+1).
struct VtParams {
  int a = 0;
  friend bool operator==(const VtParams&, const VtParams&) = default;
};

/// Levenshtein's burst code L_a(n): Rsyn(0x) = a (mod 2n).
struct Lev2Params {
  int a = 0;
  friend bool operator==(const Lev2Params&, const Lev2Params&) = default;
};

/// C_{2,1}(n; a, b): VT(x) = a (mod 2n-1), weight = b (mod 4).
struct C21Params {
  int a = 0;
  int b = 0;
  friend bool operator==(const C21Params&, const C21Params&) = default;
};

/// C_{2,1}(n; a, b) restricted to words with every run of length <= f.
struct C21RllParams {
  int a = 0;
  int b = 0;
  int f = 1;
  friend bool operator==(const C21RllParams&, const C21RllParams&) = default;
};

/// SVT^burst_{2,1}(n; c, d, P): VT(x) = c (mod 2P-1), weight = d (mod 4).
struct Svt21Params {
  int c = 0;
  int d = 0;
  int P = 1;
  friend bool operator==(const Svt21Params&, const Svt21Params&) = default;
};

/// Parameters of the array construction for (t,s)-bursts with t >= 2s.
///
/// The word is viewed as a (t-s) x m array, m = n/(t-s). Row 1 lies in
/// C_{2,1}(m; a, b) with runs of length at most f = ceil(log2 m) + 3; row i
/// (i >= 2) lies in SVT^burst_{2,1}(m; c_i, d_i, P) with P = f + 1.
class CtsParams {
 public:
  struct Row {
    int c = 0;
    int d = 0;
    friend bool operator==(const Row&, const Row&) = default;
  };

  CtsParams() = default;

  /// `rows` carries (c_i, d_i) for rows 2..t-s. Throws DomainError unless
  /// t >= 2s >= 2, (t-s) | n and every residue is in range.
  static CtsParams make(std::size_t n, std::size_t t, std::size_t s, int a, int b,
                        std::vector<Row> rows);

  std::size_t n() const { return n_; }
  std::size_t t() const { return t_; }
  std::size_t s() const { return s_; }
  std::size_t row_count() const { return t_ - s_; }
  std::size_t row_length() const { return n_ / row_count(); }
  int rll_bound() const { return f_; }
  int window_bound() const { return f_ + 1; }
  int a() const { return a_; }
  int b() const { return b_; }
  /// Residues of row i, 2 <= i <= t-s.
  const Row& row(std::size_t i) const { return rows_.at(i - 2); }
  const std::vector<Row>& rows() const { return rows_; }

  friend bool operator==(const CtsParams&, const CtsParams&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t t_ = 0;
  std::size_t s_ = 0;
  int a_ = 0;
  int b_ = 0;
  int f_ = 0;
  std::vector<Row> rows_;
};

/// C_{3,1}(n; a, b, c, d): Rsyn(0x) = a (mod 4n), odd-coordinate weight = b
/// (mod 4), even-coordinate weight = c (mod 4), r(x) = d (mod 5). n is even.
struct C31Params {
  std::size_t n = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  friend bool operator==(const C31Params&, const C31Params&) = default;
};

/// Throws DomainError unless n is even and positive and residues are in range.
void validate(const C31Params& p);

/// An explicit word set with no syndrome description.
struct NoParams {
  friend bool operator==(const NoParams&, const NoParams&) = default;
};

using SyndromeParams = std::variant<NoParams, VtParams, Lev2Params, C21Params,
                                    C21RllParams, Svt21Params, CtsParams, C31Params>;

/// Human readable "a=1,b=3" form.
std::string describe(const SyndromeParams& params);

}  // namespace burst

#endif  // BURST_PARAMS_HPP
