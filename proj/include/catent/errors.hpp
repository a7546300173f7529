#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catent {

// Precondition violations of the mathematical operations (wrong trace
// regime, malformed sequences, ...). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Attempt to build a matrix whose determinant is not 1.
class DeterminantError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed textual input. `position` is a 1-based character offset into
// the offending string. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& message) : std::runtime_error(message), position_(0) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace catent
