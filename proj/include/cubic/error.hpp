#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

// Raised when an input violates an operation's precondition.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact check that should hold does not.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cubic
