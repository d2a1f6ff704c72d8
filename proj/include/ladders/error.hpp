#pragma once

#include <stdexcept>
#include <string>

#include "ladders/report.hpp"

namespace ladders {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
public:
    explicit UnknownElement(const std::string& id) : Error("unknown element: " + id) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A hypothesis of an operation does not hold. Carries the report of the
// check that failed when there is one.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what, Report report = {})
        : Error(what), report_(std::move(report)) {}
    const Report& report() const { return report_; }

private:
    Report report_;
};

class WindowExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InfeasibleError : public PreconditionError {
public:
    InfeasibleError(const std::string& what, long max_feasible)
        : PreconditionError(what), max_feasible_(max_feasible) {}
    long max_feasible() const { return max_feasible_; }

private:
    long max_feasible_;
};

// A construction finished but its result fails a property it should have.
class PropertyViolation : public Error {
public:
    PropertyViolation(const std::string& what, Report report) : Error(what), report_(std::move(report)) {}
    const Report& report() const { return report_; }

private:
    Report report_;
};

// Something the library guarantees did not hold.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ladders
