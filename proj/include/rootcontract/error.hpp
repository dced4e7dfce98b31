#pragma once

#include <stdexcept>
#include <string>

namespace rootcontract {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes: ValidationError-like problems exit with 2, InvariantViolation with 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class NotARoot : public Error {
public:
    using Error::Error;
};

class SameRoot : public Error {
public:
    using Error::Error;
};

class ConstraintViolated : public Error {
public:
    using Error::Error;
};

class RankTooSmall : public Error {
public:
    using Error::Error;
};

class NotGoodRoot : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class DegenerateDirection : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

// An internal cross-check disagreed (formula path vs oracle, witness
// re-validation, ...). Never expected in a correct build.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A group instance or command parameter lies outside its admissible window.
class ValidationError : public Error {
public:
    ValidationError(std::string constraint, std::string actual)
        : Error(constraint + " (got " + actual + ")"),
          constraint_(std::move(constraint)),
          actual_(std::move(actual)) {}

    const std::string& constraint() const noexcept { return constraint_; }
    const std::string& actual() const noexcept { return actual_; }

private:
    std::string constraint_;
    std::string actual_;
};

}  // namespace rootcontract
