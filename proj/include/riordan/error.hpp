#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

// Violated precondition on otherwise well-formed input.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input. `offset` is the 0-based character position.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// Broken internal contract; indicates a bug, not a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Product of two non-constant affine expressions. The solver schedule is
// supposed to make this impossible; reaching it is a hard failure.
struct NonlinearProduct : InternalError {
    NonlinearProduct() : InternalError("product of two non-constant affine expressions") {}
};

}  // namespace riordan
