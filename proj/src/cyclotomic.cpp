#include "sylvester/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sylvester/numtheory.hpp"

namespace sylvester {

namespace {

struct ConductorData {
  std::int64_t conductor;
  Polynomial<Rational> phi;              // Phi_j
  std::vector<std::vector<Rational>> powers;  // zeta^k mod Phi_j, k in [0, j)
};

std::shared_ptr<const ConductorData> build(std::int64_t j);

std::shared_ptr<const ConductorData> conductor_data(std::int64_t j) {
  if (j < 1) throw std::domain_error("conductor must be positive");
  static std::mutex mutex;
  static std::map<std::int64_t, std::shared_ptr<const ConductorData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(j); it != cache.end()) return it->second;
  }
  // Built outside the lock: construction recurses into smaller conductors.
  auto data = build(j);
  std::lock_guard lock(mutex);
  return cache.try_emplace(j, std::move(data)).first->second;
}

std::vector<Rational> reduce(std::vector<Rational> c, const Polynomial<Rational>& phi) {
  const auto deg = static_cast<std::size_t>(phi.degree());
  const auto phic = phi.coeffs();
  // Phi_j is monic.
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i].is_zero()) continue;
    const Rational lead = c[i];
    for (std::size_t k = 0; k <= deg; ++k) c[i - deg + k] -= lead * phic[k];
  }
  c.resize(deg);
  return c;
}

std::shared_ptr<const ConductorData> build(std::int64_t j) {
  std::vector<Rational> xj(static_cast<std::size_t>(j) + 1);
  xj[0] = -1;
  xj[static_cast<std::size_t>(j)] = 1;
  Polynomial<Rational> phi(std::move(xj), Rational{});
  for (auto d : divisors(j)) {
    if (d == j) continue;
    auto [q, r] = divmod(phi, conductor_data(d)->phi);
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    phi = q;
  }
  auto data = std::make_shared<ConductorData>(ConductorData{j, phi, {}});
  data->powers.reserve(static_cast<std::size_t>(j));
  for (std::int64_t k = 0; k < j; ++k) {
    std::vector<Rational> mono(static_cast<std::size_t>(k) + 1);
    mono[static_cast<std::size_t>(k)] = 1;
    data->powers.push_back(reduce(std::move(mono), phi));
  }
  return data;
}

}  // namespace

Polynomial<Rational> cyclotomic_polynomial(std::int64_t j) { return conductor_data(j)->phi; }

CyclotomicElement::CyclotomicElement(std::int64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor) {
  const auto data = conductor_data(conductor);
  const auto deg = static_cast<std::size_t>(data->phi.degree());
  if (coeffs.size() > deg) {
    coeffs_ = reduce(std::move(coeffs), data->phi);
  } else {
    coeffs.resize(deg);
    coeffs_ = std::move(coeffs);
  }
}

CyclotomicElement::CyclotomicElement(std::int64_t conductor, std::vector<Rational> coeffs, bool)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CyclotomicElement CyclotomicElement::zero(std::int64_t conductor) {
  return CyclotomicElement(conductor, std::vector<Rational>{});
}

CyclotomicElement CyclotomicElement::one(std::int64_t conductor) {
  return rational(conductor, Rational(1));
}

CyclotomicElement CyclotomicElement::rational(std::int64_t conductor, const Rational& value) {
  return CyclotomicElement(conductor, std::vector<Rational>{value});
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational CyclotomicElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic element is not rational");
  return coeffs_.front();
}

void CyclotomicElement::check_conductor(const CyclotomicElement& o) const {
  if (conductor_ != o.conductor_) {
    throw std::invalid_argument("cyclotomic conductor mismatch: " + std::to_string(conductor_) +
                                " vs " + std::to_string(o.conductor_));
  }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  check_conductor(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  check_conductor(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
  check_conductor(o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!o.coeffs_[k].is_zero()) prod[i + k] += coeffs_[i] * o.coeffs_[k];
    }
  }
  coeffs_ = reduce(std::move(prod), conductor_data(conductor_)->phi);
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // Extended Euclid on (a, Phi_j), tracking only the cofactor of a.
  const Polynomial<Rational> phi = conductor_data(conductor_)->phi;
  Polynomial<Rational> r0 = phi, r1(coeffs_, Rational{});
  Polynomial<Rational> t0(Rational{}), t1 = Polynomial<Rational>::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial<Rational> t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.degree() != 0) throw std::logic_error("cyclotomic polynomial is not irreducible");
  t0 *= Rational(1) / r0.leading();
  std::vector<Rational> c(t0.coeffs().begin(), t0.coeffs().end());
  return CyclotomicElement(conductor_, std::move(c));
}

CyclotomicElement CyclotomicElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicElement result = one(conductor_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::conjugate(std::int64_t n) const {
  if (std::gcd(n, conductor_) != 1) throw std::domain_error("conjugation exponent not coprime to conductor");
  const auto data = conductor_data(conductor_);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& zp = data->powers[static_cast<std::size_t>(
        floor_mod(static_cast<std::int64_t>(i) * n, conductor_))];
    for (std::size_t k = 0; k < zp.size(); ++k) out[k] += coeffs_[i] * zp[k];
  }
  return CyclotomicElement(conductor_, std::move(out), true);
}

CyclotomicElement root_power(std::int64_t j, std::int64_t k) {
  const auto data = conductor_data(j);
  return CyclotomicElement(j, data->powers[static_cast<std::size_t>(floor_mod(k, j))]);
}

CyclotomicElement cyc_inv(const CyclotomicElement& a) { return a.inverse(); }

Rational primitive_trace(const CyclotomicElement& a) {
  const std::int64_t j = a.conductor();
  CyclotomicElement sum = CyclotomicElement::zero(j);
  for (std::int64_t n = 1; n <= j; ++n) {
    if (std::gcd(n, j) == 1) sum += a.conjugate(n);
  }
  return sum.rational_value();
}

Polynomial<Rational> primitive_trace(const Polynomial<CyclotomicElement>& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(primitive_trace(c));
  return Polynomial<Rational>(std::move(out), Rational{}, p.variable());
}

}  // namespace sylvester
