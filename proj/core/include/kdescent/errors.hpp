#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdescent {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when an operation has no defined value for its input (gcd(0,0), valuation of 0).
struct UndefinedValue : std::domain_error {
    using std::domain_error::domain_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RingMismatch : std::invalid_argument {
    RingMismatch() : std::invalid_argument("residue elements belong to different rings") {}
};

class ParseError : public std::invalid_argument {
public:
    ParseError(std::string message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace kdescent
