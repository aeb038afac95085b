#pragma once

#include <stdexcept>
#include <string>

namespace torsionforge {

// Base class for every error raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

// Raised by exact evaluation when a radical's radicand is not the square of a
// rational at the given point (negative values included).
struct NotPerfectSquare : Error {
    std::string param;
    std::string value;
    NotPerfectSquare(std::string param_, std::string value_)
        : Error("radicand of '" + param_ + "' is not a perfect square at this point: " + value_),
          param(std::move(param_)), value(std::move(value_)) {}
};

struct DenominatorZero : Error {
    DenominatorZero() : Error("denominator evaluates to zero") {}
};

struct MissingParam : Error {
    std::string param;
    explicit MissingParam(std::string param_)
        : Error("no value given for parameter '" + param_ + "'"), param(std::move(param_)) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different parameter rings") {}
};

// Wedge product would exceed the top degree of the six-dimensional algebra.
struct DegreeOverflow : Error {
    DegreeOverflow(int a, int b)
        : Error("wedge of degrees " + std::to_string(a) + " and " + std::to_string(b)
                + " exceeds the top degree 6") {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

// Basis index outside 1..6.
struct DimensionError : Error {
    explicit DimensionError(int index)
        : Error("basis index " + std::to_string(index) + " outside 1..6") {}
};

// d^2 != 0 for the declared structure constants.
struct JacobiViolation : Error {
    int basis_index;
    explicit JacobiViolation(int k)
        : Error("d(d e" + std::to_string(k) + ") != 0: structure constants violate the Jacobi identity"),
          basis_index(k) {}
};

struct SyntaxError : Error {
    int line;
    int column;
    std::string expected;
    SyntaxError(int line_, int column_, std::string expected_)
        : Error("syntax error at line " + std::to_string(line_) + ", column "
                + std::to_string(column_) + ": expected " + expected_),
          line(line_), column(column_), expected(std::move(expected_)) {}
};

struct UndeclaredParam : Error {
    std::string name;
    int line;
    int column;
    UndeclaredParam(std::string name_, int line_, int column_)
        : Error("undeclared parameter '" + name_ + "' at line " + std::to_string(line_)
                + ", column " + std::to_string(column_)),
          name(std::move(name_)), line(line_), column(column_) {}
};

struct UnsupportedOperation : Error {
    explicit UnsupportedOperation(const std::string& what) : Error(what) {}
};

// Exactness query on a form with d(omega) != 0.
struct NotClosed : Error {
    explicit NotClosed(const std::string& what) : Error(what) {}
};

// Input outside the documented parameter domain (r,t != 0, r^2 > |u|, ...).
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown name '" + name + "'") {}
};

}  // namespace torsionforge
