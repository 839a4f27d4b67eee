#pragma once

#include <stdexcept>
#include <string>

namespace artinsigma {

/// Malformed or semantically invalid input: unknown ids, odd labels in a
/// document, FC violations, composite primes, zero characters where a
/// nonzero one is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (two independent computations
/// disagree). Always a bug in this library.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace artinsigma
