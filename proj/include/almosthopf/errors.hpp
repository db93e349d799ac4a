#ifndef ALMOSTHOPF_ERRORS_HPP
#define ALMOSTHOPF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace almosthopf {

// Base for all library-specific failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or files (CLI maps this to the usage exit code).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked on data that fails its stated precondition,
// e.g. constructing an algebra over a structure that fails verification.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace almosthopf

#endif
