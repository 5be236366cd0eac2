#pragma once

#include <stdexcept>
#include <string>

namespace linecut {

/// Malformed or unsupported input text (AIGER, edge lists, serialized DAGs).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A hard size or parameter guard was violated (oracle limits, CLI bounds).
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace linecut
