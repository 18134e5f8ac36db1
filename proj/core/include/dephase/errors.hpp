#pragma once

#include <stdexcept>
#include <string>

namespace dephase {

/// Raised when an input violates a documented precondition (maps to exit code 2).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical routine fails to deliver its stated accuracy (exit code 3).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dephase
