#pragma once

#include <stdexcept>
#include <string>

namespace latroot {

// Base error carrying a module-qualified code such as "plumbing.NotNegativeDefinite".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Bad user input (CLI exit status 3).
class InputError : public Error {
public:
    using Error::Error;
};

// An internal invariant or a cross-check failed (CLI exit status 2).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace latroot
