#pragma once

#include <stdexcept>
#include <string>

namespace femtonc {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parameters that cannot describe a valid network (e.g. H_c > F).
class InvalidConfiguration : public Error {
public:
  using Error::Error;
};

// Malformed arguments to a graph or theory routine.
class InvalidInput : public Error {
public:
  using Error::Error;
};

// An exact solver was asked to work above its size cap.
class SolverLimit : public Error {
public:
  using Error::Error;
};

// Theory formulas that need integer repetition index.
class UnsupportedConfiguration : public Error {
public:
  using Error::Error;
};

// Degenerate probability/size inputs (pi == 1 in chi_approx, etc.).
class DegenerateInput : public Error {
public:
  using Error::Error;
};

class InsufficientData : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace femtonc
