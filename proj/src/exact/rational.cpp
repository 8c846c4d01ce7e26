#include "monoap/rational.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <ostream>

#include "monoap/errors.hpp"

namespace monoap {
namespace {

using i128 = __int128;
using u64 = std::uint64_t;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// Binary gcd; gcd(0, b) = b.
u64 gcd_u64(u64 a, u64 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a == 1 || b == 1) return 1;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u64 abs_u64(std::int64_t v) { return v < 0 ? u64(0) - u64(v) : u64(v); }

bool fits(i128 v) { return v >= -i128(kMax) && v <= i128(kMax); }

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool mpz_fits(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && mpz_get_si(z.get_mpz_t()) != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw DivisionByZero();
  if (numerator == INT64_MIN || denominator == INT64_MIN) {
    *this = from_big(mpq_class(to_mpz(numerator), to_mpz(denominator)) );
    return;
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  u64 g = gcd_u64(abs_u64(numerator), u64(denominator));
  if (g == 0) g = 1;
  num_ = numerator / std::int64_t(g);
  den_ = denominator / std::int64_t(g);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  *this = from_big(std::move(v));
}

void Rational::promote_int(long long value) {
  big_ = std::make_shared<const mpq_class>(to_mpz(value));
  num_ = 0;
  den_ = 1;
}

Rational Rational::from_big(mpq_class value) {
  Rational r;
  if (mpz_fits(value.get_num()) && mpz_fits(value.get_den())) {
    r.num_ = mpz_get_si(value.get_num_mpz_t());
    r.den_ = mpz_get_si(value.get_den_mpz_t());
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return r;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return from_big(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

// Knuth's reduced-form addition: all gcds stay on 64-bit words.
Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      i128 n = i128(a.num_) + b.num_;
      if (fits(n)) return Rational(static_cast<long long>(n));
    }
    u64 g = gcd_u64(u64(a.den_), u64(b.den_));
    Rational r;
    if (g == 1) {
      i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
      i128 d = i128(a.den_) * b.den_;
      if (fits(n) && fits(d)) {
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        if (r.num_ == 0) r.den_ = 1;
        return r;
      }
    } else {
      std::int64_t ad = a.den_ / std::int64_t(g);
      std::int64_t bd = b.den_ / std::int64_t(g);
      i128 t = i128(a.num_) * bd + i128(b.num_) * ad;
      if (t == 0) return Rational();
      i128 tm = t % i128(g);
      u64 g2 = gcd_u64(g, u64(tm < 0 ? -tm : tm));
      i128 n = t / i128(g2);
      i128 d = i128(ad) * (b.den_ / std::int64_t(g2));
      if (fits(n) && fits(d)) {
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
      }
    }
  }
  return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    u64 g1 = gcd_u64(abs_u64(a.num_), u64(b.den_));
    u64 g2 = gcd_u64(abs_u64(b.num_), u64(a.den_));
    i128 n = i128(a.num_ / std::int64_t(g1)) * (b.num_ / std::int64_t(g2));
    i128 d = i128(a.den_ / std::int64_t(g2)) * (b.den_ / std::int64_t(g1));
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = std::int64_t(n);
      r.den_ = std::int64_t(d);
      return r;
    }
  }
  return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value is big iff it does not fit inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  mpz_class num, den(1);
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash);
    auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) throw DivisionByZero();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) throw ParseError("malformed decimal: '" + std::string(text) + "'");
    num.set_str(std::string(ip) + std::string(fp), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  } else {
    if (!all_digits(body)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    num.set_str(std::string(body), 10);
  }
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace monoap
