// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <stdexcept>
#include <string>

namespace cflab {

/// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument values (bad letters, mismatched lengths, unknown names).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Grammar text, DFA JSON, advice tables, words on the command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (z not in L(G), |z| < p, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale cost limit would be exceeded. Callers may retry with force.
class CostGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace cflab
