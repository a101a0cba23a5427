#pragma once

#include <stdexcept>
#include <string>

namespace basesize {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside an operation's domain.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured capacity bound or search cap was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold exactly did not (non-exact division by |G|,
/// negative orbit difference, formula/oracle disagreement on a controlled
/// action). Always a bug, never a user error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace basesize
