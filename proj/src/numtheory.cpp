#include "sylvester/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sylvester/summands.hpp"

namespace sylvester {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) throw std::domain_error(std::string(what) + ": argument must be positive");
}

}  // namespace

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::int64_t totient(std::int64_t n) {
  require_positive(n, "totient");
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::int64_t n) {
  require_positive(n, "moebius");
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> divisor_union(const SummandSet& d) {
  std::vector<std::int64_t> out;
  for (auto v : d.distinct()) {
    auto ds = divisors(v);
    out.insert(out.end(), ds.begin(), ds.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& values) {
  std::int64_t l = 1;
  for (auto v : values) l = std::lcm(l, v);
  return l;
}

std::int64_t circulator(std::int64_t j, std::int64_t s) {
  require_positive(j, "circulator");
  s = floor_mod(s, j);
  std::int64_t result = 1;
  for (const auto& [p, e] : factorize(j)) {
    std::int64_t scale = 1;
    for (int i = 1; i < e; ++i) scale *= p;
    if (s % scale != 0) return 0;
    result *= scale * ((s / scale) % p == 0 ? p - 1 : -1);
  }
  return result;
}

}  // namespace sylvester
