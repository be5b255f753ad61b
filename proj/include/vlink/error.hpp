#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlink {

// Malformed Gauss code text. position() is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structurally invalid diagram (label counts, kinds, signs).
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation's documented precondition does not hold for its input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search or enumeration would exceed its configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vlink
