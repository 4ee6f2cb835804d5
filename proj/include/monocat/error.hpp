#pragma once

#include <stdexcept>
#include <string>

namespace monocat {

/// Malformed or inconsistent input (bad JSON, mismatched shapes, wrong base).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The operation is not available for the kind of base category supplied.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A configured resource budget ran out before the computation finished.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace monocat
