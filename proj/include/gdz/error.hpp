#pragma once

#include <stdexcept>
#include <string>

namespace gdz {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error("floating overflow: " + msg) {}
};

struct SingularMatrixError : Error {
    SingularMatrixError() : Error("singular matrix") {}
};

struct NoGroupInverseError : Error {
    explicit NoGroupInverseError(int index)
        : Error("no group inverse: Drazin index " + std::to_string(index) + " exceeds 1") {}
};

/// A route precondition (e.g. ab = 0) does not hold; carries the residual.
struct PreconditionError : Error {
    double residual;
    PreconditionError(const std::string& what_failed, double res)
        : Error("precondition violated: " + what_failed +
                " (residual " + std::to_string(res) + ")"),
          residual(res) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct InfeasibleConfigError : Error {
    explicit InfeasibleConfigError(const std::string& msg)
        : Error("infeasible configuration: " + msg) {}
};

struct CannotIsolateError : Error {
    explicit CannotIsolateError(const std::string& msg)
        : Error("cannot isolate condition: " + msg) {}
};

} // namespace gdz
