#include "sylvester/oracle.hpp"

namespace sylvester {

CountTable dp_count(const SummandSet& d, std::size_t max_s) {
  std::vector<BigInt> w(max_s + 1);
  w[0] = 1;
  for (auto v : d.elements()) {
    const auto step = static_cast<std::size_t>(v);
    for (std::size_t s = step; s <= max_s; ++s) w[s] += w[s - step];
  }
  return {d, std::move(w)};
}

CountTable series_count(const SummandSet& d, std::size_t max_s) {
  std::vector<BigInt> product(max_s + 1);
  product[0] = 1;
  for (auto v : d.elements()) {
    const auto step = static_cast<std::size_t>(v);
    std::vector<BigInt> next(max_s + 1);
    for (std::size_t a = 0; a <= max_s; ++a) {
      if (product[a] == 0) continue;
      for (std::size_t b = 0; a + b <= max_s; b += step) next[a + b] += product[a];
    }
    product = std::move(next);
  }
  return {d, std::move(product)};
}

}  // namespace sylvester
