#ifndef IZETA_ERRORS_HPP
#define IZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace izeta {

// Exit-code mapping for the CLI lives in tools/; the hierarchy here mirrors it:
// ParseError -> 2, ValidationError -> 3, ConvergenceError -> 4.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Bad domain data: failed admissibility, wrong signature, out-of-domain argument.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A truncation/quadrature loop hit its cap without meeting its tolerance.
// `last_measure` carries the last observed shell mass / level delta / tail sample.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double last_measure)
      : Error(msg), last_measure_(last_measure) {}
  double last_measure() const { return last_measure_; }

 private:
  double last_measure_;
};

class BranchError : public Error {
 public:
  explicit BranchError(const std::string& msg) : Error(msg) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

}  // namespace izeta

#endif
