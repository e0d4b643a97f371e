#pragma once

#include <stdexcept>
#include <string>

namespace nonpos {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (bad document, bad flag value, ...).
/// The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a documented capacity guard (e.g. formula enumeration width).
class CapacityError : public InputError {
public:
    using InputError::InputError;
};

/// A broken internal invariant. Seeing one of these is a bug in the engine,
/// never a user error. The CLI maps these to exit code 3.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void internal_check(bool condition, const std::string& message) {
    if (!condition) {
        throw InternalError("internal invariant violated: " + message);
    }
}

} // namespace nonpos
