#pragma once

#include <stdexcept>
#include <string>

namespace dflag {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad permutation word, degree mismatch, unparsable text.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Mathematical precondition violated (non-dominant weight, q out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Refused because the computation would exceed a configured size cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A relation handed to the poset builder is not a partial order.
class NotAPartialOrder : public Error {
 public:
  using Error::Error;
};

// Bruhat interval [u, v] requested with u not below v.
class EmptyInterval : public Error {
 public:
  using Error::Error;
};

// No closed-form prediction exists for the requested case.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

}  // namespace dflag
