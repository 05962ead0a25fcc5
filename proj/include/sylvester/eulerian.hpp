#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "sylvester/cyclotomic.hpp"
#include "sylvester/polynomial.hpp"

namespace sylvester {

using CyclotomicPolynomial = Polynomial<CyclotomicElement>;

/// Eulerian numbers and higher-order Eulerian polynomials for one fixed
/// base rho in Q(zeta_j), with the numbers H_n(rho^d) memoized per exponent.
/// When rho^j = 1 the memo is keyed by d mod j.
class EulerianContext {
 public:
  explicit EulerianContext(CyclotomicElement rho);

  const CyclotomicElement& rho() const { return rho_; }
  std::int64_t conductor() const { return rho_.conductor(); }

  /// H_0..H_nmax of rho^d. Throws std::domain_error if rho^d == 1.
  std::vector<CyclotomicElement> numbers(std::int64_t d, unsigned nmax);

  /// H_0^(m)(s)..H_nmax^(m)(s) for rho and the weights d; the expansion of
  /// (s + sum_i d_i H(rho^{d_i}))^n with H^k lowered to H_k. Empty weights
  /// give s^n.
  std::vector<CyclotomicPolynomial> higher_table(unsigned nmax, std::span<const std::int64_t> d);

  CyclotomicPolynomial higher(unsigned n, std::span<const std::int64_t> d) {
    return higher_table(n, d)[n];
  }

 private:
  CyclotomicElement rho_;
  bool periodic_;
  std::mutex mutex_;
  std::map<std::int64_t, std::vector<CyclotomicElement>> memo_;
};

/// H_n(rho) from rho H_n = (H + 1)^n, H_0 = 1. Throws std::domain_error if
/// rho == 1.
CyclotomicElement eulerian_number(unsigned n, const CyclotomicElement& rho);

/// H_n^(m)(s, rho | d) as a polynomial in s over Q(zeta_j).
CyclotomicPolynomial eulerian_higher(unsigned n, const CyclotomicElement& rho,
                                     std::span<const std::int64_t> d);

/// H_n^(m)[rho | d] = H_n^(m)(0, rho | d).
CyclotomicElement eulerian_higher_number(unsigned n, const CyclotomicElement& rho,
                                         std::span<const std::int64_t> d);

}  // namespace sylvester
