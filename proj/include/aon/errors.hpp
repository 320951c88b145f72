#pragma once

#include <stdexcept>
#include <string>

namespace aon {

// Base of everything thrown by the library. CLI maps ParseError to exit
// code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Scalar text or a JSON document that does not match the accepted grammar.
class ParseError : public Error {
public:
    using Error::Error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class NotSolidError : public Error {
public:
    using Error::Error;
};

class NotAONError : public Error {
public:
    using Error::Error;
};

class NotSymmetricError : public Error {
public:
    using Error::Error;
};

class NotIdempotentFamilyError : public Error {
public:
    using Error::Error;
};

class DegenerateSystemError : public Error {
public:
    using Error::Error;
};

class DegenerateFormError : public Error {
public:
    using Error::Error;
};

class NoSolutionError : public Error {
public:
    using Error::Error;
};

class NonUniqueSolutionError : public Error {
public:
    using Error::Error;
};

class NotSplitSemisimpleError : public Error {
public:
    using Error::Error;
};

class AxiomViolationError : public Error {
public:
    using Error::Error;
};

class ZeroKError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

// Signals a broken internal invariant: a result failed its own verification
// even though the mathematics guarantees it. Always a bug, never user input.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

} // namespace aon
