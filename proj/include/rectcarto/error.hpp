#pragma once

#include <stdexcept>
#include <string>

namespace rectcarto {

/// Malformed or inconsistent input (bad values, schema violations, bad flags).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The pseudo-dual graph of the input map has more than one component.
class ConnectivityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rectcarto
