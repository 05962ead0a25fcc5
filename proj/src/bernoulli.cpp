#include "sylvester/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace sylvester {

Rational bernoulli_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard lock(mutex);
  while (memo.size() <= n) {
    const auto m = static_cast<unsigned>(memo.size());
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * memo[k];
    memo.push_back(-acc / Rational(static_cast<std::int64_t>(m) + 1));
  }
  return memo[n];
}

std::vector<Polynomial<Rational>> bernoulli_higher_table(unsigned nmax,
                                                         std::span<const std::int64_t> weights) {
  std::vector<Polynomial<Rational>> level;
  level.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) level.push_back(Polynomial<Rational>::monomial(Rational(1), n));

  for (auto w : weights) {
    if (w == 0) throw std::invalid_argument("Bernoulli weights must be nonzero");
    // w^k B_k, the single-weight series.
    std::vector<Rational> scaled(nmax + 1);
    BigInt wk = 1;
    for (unsigned k = 0; k <= nmax; ++k) {
      scaled[k] = Rational(wk) * bernoulli_number(k);
      wk *= static_cast<long>(w);
    }
    std::vector<Polynomial<Rational>> next;
    next.reserve(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
      Polynomial<Rational> acc;
      for (unsigned k = 0; k <= n; ++k) {
        if (scaled[k].is_zero()) continue;
        acc += level[n - k] * (Rational(binomial(n, k)) * scaled[k]);
      }
      next.push_back(std::move(acc));
    }
    level = std::move(next);
  }
  return level;
}

Polynomial<Rational> bernoulli_higher(unsigned n, std::span<const std::int64_t> weights) {
  if (weights.empty()) throw std::invalid_argument("Bernoulli polynomial needs at least one weight");
  return bernoulli_higher_table(n, weights)[n];
}

Polynomial<Rational> bernoulli_higher(unsigned n, const SummandSet& d) {
  return bernoulli_higher(n, d.elements());
}

}  // namespace sylvester
