#pragma once

#include <stdexcept>
#include <string>

namespace fracquad {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument violated a documented precondition.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Adaptive integration stopped without reaching the requested tolerance.
/// Carries the error estimate that was actually achieved.
class ToleranceError : public Error {
public:
    ToleranceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

/// An iterative process (series, Newton) hit its cap before converging.
/// Carries the last residual / term magnitude.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// A matrix required to be invertible is singular or numerically so.
class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

} // namespace fracquad
