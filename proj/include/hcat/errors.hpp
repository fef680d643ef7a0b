#pragma once

#include <stdexcept>
#include <string>

namespace hcat {

// Argument outside the domain of a formula (radicand <= 0, rho below the neck, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical check failed. `where` is the offending abscissa (usually t).
class CertificationFailure : public std::runtime_error {
public:
    CertificationFailure(const std::string& what, double where, double value)
        : std::runtime_error(what), where_(where), value_(value) {}

    double where() const noexcept { return where_; }
    double value() const noexcept { return value_; }

private:
    double where_;
    double value_;
};

}  // namespace hcat
