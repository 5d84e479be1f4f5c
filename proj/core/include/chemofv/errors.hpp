#ifndef CHEMOFV_ERRORS_HPP
#define CHEMOFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chemofv {

/// Parameter or argument outside the admissible class.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver exhausted its iteration cap; carries the residual it reached.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved, int iterations)
        : std::runtime_error(what), achieved_residual(achieved), iterations(iterations) {}
    double achieved_residual;
    int iterations;
};

/// A sweep or cross-check could not produce a meaningful result.
class ExperimentError : public std::runtime_error {
public:
    explicit ExperimentError(const std::string& what) : std::runtime_error(what) {}
};

/// Config text could not be parsed; carries the offending 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

/// Config parsed but violates a model constraint.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem write failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant (e.g. a negative cell); always a bug, never a result.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace chemofv

#endif
