#pragma once

// Exact rational numbers.
//
// Values whose numerator and denominator both fit in a signed 64-bit word are
// stored inline and handled with 128-bit intermediates; anything larger is
// promoted to a GMP rational. Every result is reduced, the denominator is
// always positive, and equality is structural.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace monoap {

class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) { if (value == INT64_MIN) promote_int(value); }
  Rational(long long numerator, long long denominator);
  explicit Rational(const mpq_class& value);

  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const;
  bool is_integer() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  /// Canonical text: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DivisionByZero when b == 0.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// True while the value is held inline (no GMP allocation).
  bool is_small() const { return !big_; }

 private:
  void promote_int(long long value);
  static Rational from_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Parses "p", "-p", "p/q" or a terminating decimal such as "-0.125".
/// Throws ParseError on malformed text and DivisionByZero on "p/0".
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace monoap
