#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indsat {

// Input exceeds a documented size bound (64-vertex graphs, 16-vertex
// isomorphism scope, order-7 exhaustive enumeration).
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input; offset() is the byte position of the first
// offending character.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

// A case-analysis witness failed to validate. This signals a bug in the
// witness formulas, never a property of the input.
class internal_consistency_error : public std::logic_error {
  public:
    explicit internal_consistency_error(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace indsat
