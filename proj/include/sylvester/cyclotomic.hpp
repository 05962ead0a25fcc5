#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sylvester/polynomial.hpp"
#include "sylvester/rational.hpp"

namespace sylvester {

/// Phi_j: monic, integer coefficients, degree totient(j). Built by dividing
/// x^j - 1 by Phi_d for every proper divisor d. Cached per j.
Polynomial<Rational> cyclotomic_polynomial(std::int64_t j);

/// Element of Q(zeta_j), stored as a polynomial in zeta_j of degree below
/// totient(j) reduced modulo Phi_j, so equal elements have equal coefficients.
class CyclotomicElement {
 public:
  /// Reduces an arbitrary-length coefficient vector (powers of zeta_j)
  /// modulo Phi_j.
  CyclotomicElement(std::int64_t conductor, std::vector<Rational> coeffs);

  static CyclotomicElement zero(std::int64_t conductor);
  static CyclotomicElement one(std::int64_t conductor);
  static CyclotomicElement rational(std::int64_t conductor, const Rational& value);

  std::int64_t conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::logic_error unless is_rational().
  Rational rational_value() const;

  /// Throws std::domain_error on zero.
  CyclotomicElement inverse() const;
  CyclotomicElement pow(std::int64_t e) const;
  /// Galois image under zeta_j -> zeta_j^n, gcd(n, j) = 1.
  CyclotomicElement conjugate(std::int64_t n) const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const Rational& c);
  CyclotomicElement& operator/=(const CyclotomicElement& o) { return *this *= o.inverse(); }

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const Rational& c) { return a *= c; }
  friend CyclotomicElement operator*(const Rational& c, CyclotomicElement a) { return a *= c; }
  friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
  friend CyclotomicElement operator-(const CyclotomicElement& a) { return a * Rational(-1); }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CyclotomicElement(std::int64_t conductor, std::vector<Rational> coeffs, bool reduced);
  void check_conductor(const CyclotomicElement& o) const;

  std::int64_t conductor_;
  std::vector<Rational> coeffs_;
};

inline CyclotomicElement zero_like(const CyclotomicElement& a) { return CyclotomicElement::zero(a.conductor()); }
inline CyclotomicElement one_like(const CyclotomicElement& a) { return CyclotomicElement::one(a.conductor()); }
inline bool is_zero(const CyclotomicElement& a) { return a.is_zero(); }
inline bool same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a.conductor() == b.conductor();
}

/// zeta_j^(k mod j).
CyclotomicElement root_power(std::int64_t j, std::int64_t k);

CyclotomicElement cyc_inv(const CyclotomicElement& a);

/// Sum of all Galois conjugates of `a` (zeta_j -> zeta_j^n over 1 <= n <= j
/// with gcd(n, j) = 1). Always rational; a non-rational sum means a bug and
/// raises std::logic_error.
Rational primitive_trace(const CyclotomicElement& a);

/// Coefficientwise trace of a polynomial with cyclotomic coefficients.
Polynomial<Rational> primitive_trace(const Polynomial<CyclotomicElement>& p);

}  // namespace sylvester
