#pragma once

#include <stdexcept>
#include <string>

namespace perfgen {

/// Raised on contract violations: bad input text, shape mismatches,
/// singular changes of coordinates and similar caller errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace perfgen
