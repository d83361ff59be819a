#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkrank {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a data invariant (nonpositive weight, loop, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A parameter outside the interval where the requested quantity exists.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for this kind of graph (e.g. diagonal measures on digraphs).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Problem too large for a dense code path.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An iterative method hit its iteration cap. Carries the best iterate seen.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string &what, std::vector<double> best, std::size_t iterations,
                     double residual)
        : Error(what), best_(std::move(best)), iterations_(iterations), residual_(residual) {}

    const std::vector<double> &best_iterate() const noexcept { return best_; }
    std::size_t iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> best_;
    std::size_t iterations_;
    double residual_;
};

/// A power series did not meet its truncation rule within the term cap.
/// `bound()` is the relative size of the last term when the cap was hit.
class TruncationError : public Error {
public:
    TruncationError(const std::string &what, double bound) : Error(what), bound_(bound) {}
    double bound() const noexcept { return bound_; }

private:
    double bound_;
};

} // namespace walkrank
