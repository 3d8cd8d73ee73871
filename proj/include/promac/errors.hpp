#pragma once

#include <stdexcept>
#include <string>

namespace promac {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter combination violates an operation's precondition.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A combinatorial search ran out of room (length bound or node budget).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A receiver saw an event stream that breaks the wire contract.
class ProtocolError : public Error {
public:
    using Error::Error;
};

}  // namespace promac
