#include "burst/word.hpp"

#include <bit>

#include "burst/errors.hpp"

namespace burst {
namespace {

constexpr std::uint64_t low_mask(std::size_t length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

constexpr std::uint64_t shl(std::uint64_t v, std::size_t k) {
  return k >= 64 ? 0 : v << k;
}

constexpr std::uint64_t shr(std::uint64_t v, std::size_t k) {
  return k >= 64 ? 0 : v >> k;
}

void require_length(std::size_t length) {
  if (length > Word::kMaxLength) {
    throw DomainError("word length " + std::to_string(length) +
                      " exceeds the supported maximum of 64");
  }
}

}  // namespace

Word::Word(std::uint64_t packed, std::size_t length) : length_(length) {
  require_length(length);
  bits_ = packed & low_mask(length);
}

Word Word::parse(std::string_view text) {
  require_length(text.size());
  std::uint64_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw DomainError("malformed bitstring '" + std::string(text) +
                        "': only '0' and '1' are allowed");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return Word(bits, text.size());
}

Word Word::zeros(std::size_t length) { return Word(0, length); }

Word Word::ones(std::size_t length) { return Word(low_mask(length), length); }

int Word::at(std::size_t coordinate) const {
  if (coordinate < 1 || coordinate > length_) {
    throw DomainError("coordinate " + std::to_string(coordinate) +
                      " outside [1, " + std::to_string(length_) + "]");
  }
  return (*this)[coordinate - 1];
}

Word Word::with_symbol(std::size_t i, int symbol) const {
  const std::uint64_t bit = std::uint64_t{1} << (length_ - 1 - i);
  Word out = *this;
  out.bits_ = symbol ? (bits_ | bit) : (bits_ & ~bit);
  return out;
}

Word Word::slice(std::size_t pos, std::size_t length) const {
  if (pos + length > length_) {
    throw DomainError("slice out of range");
  }
  return Word(shr(bits_, length_ - pos - length), length);
}

Word Word::erased(std::size_t pos, std::size_t count) const {
  return prefix(pos) + suffix_from(pos + count);
}

Word Word::inserted(std::size_t pos, const Word& w) const {
  return prefix(pos) + w + suffix_from(pos);
}

Word Word::replaced(std::size_t pos, std::size_t count, const Word& w) const {
  return prefix(pos) + w + suffix_from(pos + count);
}

std::size_t Word::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::string Word::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  const std::size_t length = lhs.length_ + rhs.length_;
  require_length(length);
  return Word(shl(lhs.bits_, rhs.length_) | rhs.bits_, length);
}

}  // namespace burst
