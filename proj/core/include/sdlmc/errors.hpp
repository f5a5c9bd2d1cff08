#ifndef SDLMC_ERRORS_HPP
#define SDLMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdlmc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid caller-supplied values (domain violations, bad arguments).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Malformed input data (basis files, CSV). Carries a line number when known.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, long line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

/// Quadrature or transform failed to reach the requested tolerance.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, double achieved_error)
        : Error(msg + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}
    double achieved_error() const { return achieved_error_; }

  private:
    double achieved_error_;
};

/// An entropy exceeded its rigorous bound. Signals inconsistent density vs.
/// moments; surfaced as a diagnostic, never clamped.
class BoundViolation : public Error {
  public:
    explicit BoundViolation(const std::string& msg) : Error(msg) {}
};

} // namespace sdlmc

#endif
