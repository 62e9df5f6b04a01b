#pragma once

#include <stdexcept>
#include <string>

namespace subzeta {

// Each subclass maps to one CLI exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 7; }
};

class UnknownNameError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

class InvalidPartitionError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 4; }
};

class ParseError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 5; }
};

class PreconditionError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 6; }
};

// Structure constants fail antisymmetry or Jacobi, or the operators are not nilpotent.
class InvalidAlgebraError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Supplied grading disagrees with the upper centralizer series.
class GradingError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

[[noreturn]] void fail_precondition(const std::string& what);

}  // namespace subzeta
