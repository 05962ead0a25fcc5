#pragma once

#include <cstdint>
#include <vector>

namespace sylvester {

class SummandSet;

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial division. Throws std::domain_error for n <= 0.
Factorization factorize(std::int64_t n);

std::int64_t totient(std::int64_t n);
int moebius(std::int64_t n);

/// Sorted positive divisors of n.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Every j >= 1 dividing at least one summand, ascending. These are the
/// periods of the waves that make up the partition function.
std::vector<std::int64_t> divisor_union(const SummandSet& d);

/// Mathematical remainder in [0, m).
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

std::int64_t lcm_of(const std::vector<std::int64_t>& values);

/// Sum of s-th powers of the primitive j-th roots of unity, computed from the
/// prime-power factors of j: each p^a contributes p^(a-1) * psi_p(s / p^(a-1)),
/// which vanishes unless p^(a-1) divides s, and psi_p(t) is p-1 when p | t
/// and -1 otherwise. Periodic in s with period j; always an integer.
std::int64_t circulator(std::int64_t j, std::int64_t s);

}  // namespace sylvester
