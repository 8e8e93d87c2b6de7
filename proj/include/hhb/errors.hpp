#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhb {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument domain: malformed interval, parameter out of range, x outside
// [u,v], non-finite samples on the probe grid, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rejected expression text. offset() is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Symbolic differentiation cannot handle the construct, e.g. f(x)^g(x) with
// both parts varying.
class UnsupportedConstruct : public Error {
 public:
  using Error::Error;
};

// The symbolic derivative disagrees with central finite differences on the
// probe grid, or the function is provably non-differentiable on the interval.
class DerivativeMismatch : public Error {
 public:
  using Error::Error;
};

// Integration failure: evaluation budget exhausted, non-finite integrand
// sample, or the error estimate would exceed the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace hhb
