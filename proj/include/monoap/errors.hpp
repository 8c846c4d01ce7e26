#pragma once

#include <stdexcept>
#include <string>

namespace monoap {

/// Raised by Rational division (and anything built on it) when the divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed textual input (rationals, colorings, cache files, ...).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pair sum lands exactly on a doubled endpoint where a strict placement is required.
class TieError : public std::runtime_error {
 public:
  TieError(int i, int j, int k)
      : std::runtime_error("tie: x" + std::to_string(i) + " + x" + std::to_string(j) +
                           " == 2*x" + std::to_string(k)),
        i_(i), j_(j), k_(k) {}

  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

/// Unreadable, unwritable or corrupt files (caches, checkpoints).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check that cannot fail on valid input did fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monoap
