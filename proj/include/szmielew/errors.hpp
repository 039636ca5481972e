#pragma once

#include <stdexcept>
#include <string>

namespace szmielew {

/// An internal post-condition failed (a constructed witness does not satisfy
/// its sentence, or a derived bound was wrong). Always a bug, never bad input.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace szmielew
