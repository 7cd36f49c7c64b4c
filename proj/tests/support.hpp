#pragma once

#include <optional>

#include "eqhilb/error.hpp"

namespace eqhilb::testing {

// Error code raised by f, or nullopt if it returned normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace eqhilb::testing
