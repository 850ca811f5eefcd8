#ifndef BURST_ERRORS_HPP
#define BURST_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burst {

class Word;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad length, residue out
/// of range, divisibility, malformed bitstring).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No candidate preimage is consistent with the received word.
class DecodeFailure : public Error {
 public:
  explicit DecodeFailure(const std::string& what,
                         std::optional<std::size_t> row = std::nullopt)
      : Error(what), row_(row) {}

  /// 1-based array row that failed, for array decoders.
  std::optional<std::size_t> row() const noexcept { return row_; }

 private:
  std::optional<std::size_t> row_;
};

/// More than one codeword explains the received word. On valid parameters
/// this falsifies a uniqueness claim and must never be swallowed.
class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::vector<std::string> candidates)
      : Error(what), candidates_(std::move(candidates)) {}

  const std::vector<std::string>& candidates() const noexcept {
    return candidates_;
  }

 private:
  std::vector<std::string> candidates_;
};

/// An enumeration guard refused the request.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A decoder was paired with a codebook it cannot serve.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

}  // namespace burst

#endif  // BURST_ERRORS_HPP
