#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critset {

/// Base of every error the library throws; `kind()` is the machine-readable tag
/// the CLI puts in its error object.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

/// Malformed or out-of-contract arguments (bad vertex, improper colouring, ...).
class InputError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "input"; }
};

/// Text that does not decode; carries the byte offset of the first bad byte.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    const char* kind() const noexcept override { return "parse"; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The requested number of colours is below the chromatic number.
class InfeasibleError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "infeasible"; }
};

/// A solver ran past its time budget. No value is reported in that case.
class BudgetExhausted : public Error {
public:
    BudgetExhausted() : Error("time budget exhausted") {}
    const char* kind() const noexcept override { return "budget-exhausted"; }
};

}  // namespace critset
