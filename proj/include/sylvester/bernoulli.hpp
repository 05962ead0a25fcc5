#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sylvester/polynomial.hpp"
#include "sylvester/rational.hpp"
#include "sylvester/summands.hpp"

namespace sylvester {

/// B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0. Memoized; safe to
/// call concurrently.
Rational bernoulli_number(unsigned n);

/// Higher-order Bernoulli polynomials B_0..B_nmax in x for the given weights,
/// generated by exp(xt) t^m prod(w_i) / prod(exp(w_i t) - 1). Built by peeling
/// one weight at a time:
///   B_n^(m)(x) = sum_k C(n,k) w_m^k B_k B_{n-k}^(m-1)(x),  B_n^(0)(x) = x^n.
/// Weights may be negative (any nonzero integer) and may be empty.
std::vector<Polynomial<Rational>> bernoulli_higher_table(unsigned nmax,
                                                         std::span<const std::int64_t> weights);

/// B_n^(m)(x | weights). Throws std::invalid_argument for empty or zero
/// weights.
Polynomial<Rational> bernoulli_higher(unsigned n, std::span<const std::int64_t> weights);
Polynomial<Rational> bernoulli_higher(unsigned n, const SummandSet& d);

}  // namespace sylvester
