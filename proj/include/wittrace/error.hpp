#ifndef WITTRACE_ERROR_HPP
#define WITTRACE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wittrace {

// Base class for domain errors (CLI exit code 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// Exact division failed: no (or no unique) solution of n*x = a in the ring.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

// A ghost vector is not in the image of the coordinate map over this ring;
// `index` is the first offending coordinate.
class NotIntegralError : public Error {
 public:
  NotIntegralError(int index, const std::string& what) : Error(what), index(index) {}
  int index;
};

class InvalidTruncationSetError : public Error {
 public:
  using Error::Error;
};

class NotAnEndomorphismError : public Error {
 public:
  using Error::Error;
};

// Malformed input files / schema violations (CLI exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wittrace

#endif
