#include "sylvester/eulerian.hpp"

#include <stdexcept>
#include <string>

#include "sylvester/numtheory.hpp"

namespace sylvester {

EulerianContext::EulerianContext(CyclotomicElement rho)
    : rho_(std::move(rho)),
      periodic_(rho_.pow(rho_.conductor()) == CyclotomicElement::one(rho_.conductor())) {}

std::vector<CyclotomicElement> EulerianContext::numbers(std::int64_t d, unsigned nmax) {
  const std::int64_t key = periodic_ ? floor_mod(d, conductor()) : d;
  std::lock_guard lock(mutex_);
  auto& h = memo_[key];
  if (h.empty()) {
    const CyclotomicElement base = rho_.pow(d);
    const CyclotomicElement one = CyclotomicElement::one(conductor());
    if (base == one) {
      throw std::domain_error("Eulerian numbers need rho^d != 1 (d = " + std::to_string(d) + ")");
    }
    h.push_back(one);
  }
  if (h.size() <= nmax) {
    const CyclotomicElement denom = (rho_.pow(d) - CyclotomicElement::one(conductor())).inverse();
    while (h.size() <= nmax) {
      const auto n = static_cast<unsigned>(h.size());
      CyclotomicElement acc = CyclotomicElement::zero(conductor());
      for (unsigned k = 0; k < n; ++k) acc += h[k] * Rational(binomial(n, k));
      h.push_back(acc * denom);
    }
  }
  return {h.begin(), h.begin() + nmax + 1};
}

std::vector<CyclotomicPolynomial> EulerianContext::higher_table(unsigned nmax,
                                                                std::span<const std::int64_t> d) {
  const auto j = conductor();
  const auto one = CyclotomicElement::one(j);
  std::vector<CyclotomicPolynomial> level;
  level.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) level.push_back(CyclotomicPolynomial::monomial(one, n, 's'));

  for (auto w : d) {
    const auto h = numbers(w, nmax);
    std::vector<CyclotomicElement> scaled;
    scaled.reserve(nmax + 1);
    BigInt wk = 1;
    for (unsigned k = 0; k <= nmax; ++k) {
      scaled.push_back(h[k] * Rational(wk));
      wk *= static_cast<long>(w);
    }
    std::vector<CyclotomicPolynomial> next;
    next.reserve(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
      CyclotomicPolynomial acc(one, 's');
      for (unsigned k = 0; k <= n; ++k) acc += level[n - k] * (scaled[k] * Rational(binomial(n, k)));
      next.push_back(std::move(acc));
    }
    level = std::move(next);
  }
  return level;
}

CyclotomicElement eulerian_number(unsigned n, const CyclotomicElement& rho) {
  return EulerianContext(rho).numbers(1, n)[n];
}

CyclotomicPolynomial eulerian_higher(unsigned n, const CyclotomicElement& rho,
                                     std::span<const std::int64_t> d) {
  return EulerianContext(rho).higher(n, d);
}

CyclotomicElement eulerian_higher_number(unsigned n, const CyclotomicElement& rho,
                                         std::span<const std::int64_t> d) {
  return eulerian_higher(n, rho, d).coeff(0);
}

}  // namespace sylvester
