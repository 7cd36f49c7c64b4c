#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace eqhilb {

enum class ErrorCode {
  parse_error,
  empty_monomial,
  negative_exponent,
  invalid_truncation,
  not_divisible,
  zero_numerator,
  too_many_generators,
  no_parent,
  unsupported_r,
  unsupported_exponent,
  repeated_column_degrees,
  invalid_argument,
  internal,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Orbit text that failed to parse; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace eqhilb
