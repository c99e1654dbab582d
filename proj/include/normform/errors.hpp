#pragma once

#include <stdexcept>
#include <string>

namespace normform {

/* Base of every exception thrown by the library. Subclasses name the failed
 * precondition; the message carries the offending values. */
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidT : public Error {
  public:
    using Error::Error;
};

class NegativePowerOfNonUnit : public Error {
  public:
    using Error::Error;
};

class BadModulus : public Error {
  public:
    using Error::Error;
};

/* An interval enclosure was too wide to decide an inequality even at the
 * maximum working precision. */
class InconclusivePrecision : public Error {
  public:
    using Error::Error;
};

class InsufficientPoints : public Error {
  public:
    using Error::Error;
};

class InvalidRange : public Error {
  public:
    using Error::Error;
};

class InvalidWindow : public Error {
  public:
    using Error::Error;
};

class EmptyPrimeSet : public Error {
  public:
    using Error::Error;
};

} // namespace normform
