#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sylvester/polynomial.hpp"
#include "sylvester/quasipolynomial.hpp"
#include "sylvester/rational.hpp"
#include "sylvester/summands.hpp"

namespace sylvester {

/// The period-1 wave: B_{m-1}^(m)(s + s_m | d) / ((m-1)! prod(d)), a
/// polynomial in s of degree m-1.
Polynomial<Rational> polynomial_part(const SummandSet& d);

/// Wave of period j written with Bernoulli polynomials only: the polynomial
/// part of the j-modified set, shifted by -sum(d_i r_i) over all tuples r in
/// [0, j)^(m-k_j) of the non-divisible summands and weighted by the
/// circulator at the same argument.
///
/// Throws std::domain_error if j divides no summand, std::logic_error if a
/// class polynomial exceeds degree k_j - 1.
Quasipolynomial wave_bernoulli(const SummandSet& d, std::int64_t j);

enum class EulerianForm {
  /// Bernoulli polynomials in s times traced Eulerian numbers.
  kNumbers,
  /// Bernoulli numbers times traced Eulerian polynomials in s.
  kPolynomials,
};

/// Wave of period j via Q(zeta_j): for each residue c, the sum over
/// primitive roots of rho^-c / prod(1 - rho^{d_i}) (non-divisible d_i)
/// times the Bernoulli/Eulerian convolution, taken as a Galois trace.
/// Same error contract as wave_bernoulli.
Quasipolynomial wave_eulerian(const SummandSet& d, std::int64_t j,
                              EulerianForm form = EulerianForm::kNumbers);

enum class WaveRoute { kBernoulli, kEulerian };

struct AssembleOptions {
  WaveRoute route = WaveRoute::kBernoulli;
  bool parallel = true;
};

/// The restricted partition function as a quasipolynomial with period
/// lcm(d): the classwise sum of every wave.
Quasipolynomial assemble(const SummandSet& d, AssembleOptions options = {});

/// Waves in ascending period order, one per element of divisor_union(d).
std::vector<std::pair<std::int64_t, Quasipolynomial>> all_waves(const SummandSet& d,
                                                                AssembleOptions options = {});

/// Outcome of comparing both sides of the Eulerian/Bernoulli number relation
/// at each primitive root zeta_j^a.
struct BridgeReport {
  std::vector<std::pair<std::int64_t, bool>> per_root;  // (a, sides equal)
  bool holds() const;
};

/// Checks, exactly in Q(zeta_j) and for every primitive root rho,
///   (m-1-n)! pi_m rho^{s_m - s_k} H_{k-1-n}^(m-k)[rho | d''] /
///       ((k-1-n)! pi_k prod_{d''}(1 - rho^{d_i}))
///   == j^-(m-k) sum_r rho^{-sum d_i r_i} B_{m-1-n}^(m-k)(sum d_i r_i | j d'')
/// where d'' are the summands j does not divide and r ranges over [0, j)^(m-k).
/// Requires 0 <= n <= k_j - 1.
BridgeReport eulerian_bernoulli_bridge_check(std::int64_t j, const SummandSet& d, unsigned n);

}  // namespace sylvester
