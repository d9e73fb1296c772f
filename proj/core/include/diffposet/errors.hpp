#ifndef DIFFPOSET_ERRORS_HPP
#define DIFFPOSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diffposet {

// Base of all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A name does not denote an element of the structure at hand.
class IdentifierError : public Error {
public:
  using Error::Error;
};

// An operation required p <= q and got an incomparable pair.
class IncomparableError : public Error {
public:
  using Error::Error;
};

// Operands live over different posets / operator domains do not line up.
class DomainError : public Error {
public:
  using Error::Error;
};

// A stated precondition does not hold (e.g. degree on a non-Jordan-Holder poset).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Structural invariant of an input is violated (bad covers, pasting violation, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Text input could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A configurable resource limit was exceeded.
class CapError : public Error {
public:
  using Error::Error;
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

}  // namespace diffposet

#endif
