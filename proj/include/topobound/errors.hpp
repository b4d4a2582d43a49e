#pragma once

#include <stdexcept>
#include <string>

namespace topobound {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

// Input data is well formed but semantically invalid
// (non-commuting generators, coordinate mismatch, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// The requested exact computation exceeds the configured work or
// memory budget. Callers can catch this and fall back or give up.
class BudgetError : public Error {
public:
    using Error::Error;
};

// An experiment cannot be set up on the given instance
// (region too large, separation unreachable, ...).
class SetupError : public Error {
public:
    using Error::Error;
};

// No stabilizer multiple of the operator avoids the region.
class CleaningObstruction : public Error {
public:
    using Error::Error;
};

// Malformed text input (files, Pauli strings, CSV).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace topobound
