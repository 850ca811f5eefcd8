#ifndef BURST_WORD_HPP
#define BURST_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace burst {

/// A binary word of at most 64 symbols, packed into one machine word.
///
/// Symbols are indexed from 0 internally. Everything user facing (burst
/// starts, windows, the CLI) uses 1-based coordinates. The first symbol is
/// stored in the most significant used bit, so for words of equal length the
/// integer order of packed() is the lexicographic order of the symbols, and
/// enumerating 0..2^n-1 visits F_2^n lexicographically.
class Word {
 public:
  static constexpr std::size_t kMaxLength = 64;

  Word() = default;

  /// Low `length` bits of `packed`, first symbol most significant.
  Word(std::uint64_t packed, std::size_t length);

  /// Parses an ASCII string of '0'/'1'. Throws DomainError otherwise.
  static Word parse(std::string_view text);
  static Word zeros(std::size_t length);
  static Word ones(std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::uint64_t packed() const noexcept { return bits_; }

  /// Symbol at 0-based index i. Unchecked.
  int operator[](std::size_t i) const noexcept {
    return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1u);
  }

  /// Symbol at 1-based coordinate. Throws DomainError when out of range.
  int at(std::size_t coordinate) const;

  Word with_symbol(std::size_t i, int symbol) const;

  /// `length` symbols starting at 0-based index `pos`.
  Word slice(std::size_t pos, std::size_t length) const;
  Word prefix(std::size_t length) const { return slice(0, length); }
  Word suffix_from(std::size_t pos) const { return slice(pos, length_ - pos); }

  /// Removes `count` symbols starting at 0-based `pos`.
  Word erased(std::size_t pos, std::size_t count) const;
  /// Inserts `w` before 0-based index `pos` (pos == size() appends).
  Word inserted(std::size_t pos, const Word& w) const;
  /// Replaces `count` symbols at `pos` by `w`.
  Word replaced(std::size_t pos, std::size_t count, const Word& w) const;

  std::size_t weight() const noexcept;

  std::string to_string() const;

  friend Word operator+(const Word& lhs, const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    if (auto c = lhs.length_ <=> rhs.length_; c != 0) return c;
    return lhs.bits_ <=> rhs.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

}  // namespace burst

template <>
struct std::hash<burst::Word> {
  std::size_t operator()(const burst::Word& w) const noexcept {
    std::uint64_t h = w.packed() * 0x9E3779B97F4A7C15ull;
    h ^= (h >> 29) ^ (static_cast<std::uint64_t>(w.size()) << 57);
    return static_cast<std::size_t>(h);
  }
};

#endif  // BURST_WORD_HPP
