#pragma once

#include <functional>
#include <optional>

#include "packinglab/error.hpp"

inline std::optional<packinglab::ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const packinglab::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
