#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mertens_ap {

// Base of every error raised by the library. The CLI maps the two families
// onto exit codes: input problems -> 2, coverage/tolerance problems -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain or a violated hypothesis.
class DomainError : public Error {
public:
    using Error::Error;
};

// Requested range exceeds a configured size cap.
class SizeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& origin, std::int64_t line, const std::string& what)
        : Error(origin + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::int64_t line() const { return line_; }

private:
    std::int64_t line_;
};

// Structurally valid input that violates a contract (e.g. unsorted ordinates).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A zero dataset does not reach far enough.
class CoverageError : public Error {
public:
    CoverageError(const std::string& what, double required_gamma_max)
        : Error(what), required_(required_gamma_max) {}

    double required_gamma_max() const { return required_; }

private:
    double required_;
};

// Numerical procedure failed to reach its tolerance.
class ToleranceError : public Error {
public:
    using Error::Error;
};

}  // namespace mertens_ap
