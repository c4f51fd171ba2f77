#pragma once

#include <optional>

#include "garland/error.hpp"

namespace garland::testing {

/// Code of the Error thrown by fn, if any.
template <class F>
std::optional<ErrorCode> thrown_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace garland::testing
