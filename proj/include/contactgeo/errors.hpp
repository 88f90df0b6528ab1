#pragma once

#include <stdexcept>
#include <string>

namespace contactgeo {

// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division by a value that is identically zero.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

// A coordinate name that does not belong to the chart.
class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

// Evaluation hit a zero of the denominator.
class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& what = "pole at evaluation point") : Error(what) {}
};

// Operands live on different charts.
class ChartMismatch : public Error {
public:
    explicit ChartMismatch(const std::string& what = "chart mismatch") : Error(what) {}
};

// Metric determinant is identically zero.
class DegenerateMetric : public Error {
public:
    explicit DegenerateMetric(const std::string& what = "metric determinant is identically zero")
        : Error(what) {}
};

// A tensor slot of the wrong variance or out of range.
class SlotMismatch : public Error {
public:
    explicit SlotMismatch(const std::string& what = "tensor slot mismatch") : Error(what) {}
};

// Deformation parameter t = 0.
class ZeroParameter : public Error {
public:
    explicit ZeroParameter(const std::string& what = "parameter must be nonzero") : Error(what) {}
};

// Input does not satisfy the contact pseudo-metric axioms.
class NotContact : public Error {
public:
    explicit NotContact(const std::string& what = "not a contact pseudo-metric structure")
        : Error(what) {}
};

// Malformed expression or document.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A construction-time invariant of a structure failed.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

} // namespace contactgeo
