#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sylvester {

using BigInt = mpz_class;

/// Parses a base-10 integer with optional leading '-'. Throws
/// std::invalid_argument on anything else (no whitespace, no '+').
BigInt parse_bigint(std::string_view text);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}                    // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" (q != 0); the result is reduced.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Field hooks used by Polynomial<T>.
inline Rational zero_like(const Rational&) { return Rational{}; }
inline Rational one_like(const Rational&) { return Rational{1}; }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool same_field(const Rational&, const Rational&) { return true; }

/// n! as an exact integer.
BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace sylvester
