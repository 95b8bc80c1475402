#pragma once

#include <stdexcept>
#include <string>

namespace ratrec {

// Malformed numeric text; position() is the byte offset of the offending
// character (or end of input).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// The caller's stated error bound is too large for the uniqueness radius:
// no recovery can be trusted.
class GuaranteeViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds an exhaustive-search guard.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ratrec
