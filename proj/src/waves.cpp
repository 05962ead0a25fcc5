#include "sylvester/waves.hpp"

#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sylvester/bernoulli.hpp"
#include "sylvester/cyclotomic.hpp"
#include "sylvester/eulerian.hpp"
#include "sylvester/numtheory.hpp"

namespace sylvester {

namespace {

using RationalPolynomial = Polynomial<Rational>;

void enforce_degree_bound(const Quasipolynomial& q, int weight, std::int64_t j) {
  if (q.max_degree() > weight - 1) {
    throw std::logic_error("wave " + std::to_string(j) + " has degree " +
                           std::to_string(q.max_degree()) + " above weight bound " +
                           std::to_string(weight - 1));
  }
}

// Number of tuples r in [0, j)^len with sum(d_i r_i) == D, indexed by D.
std::vector<BigInt> shift_multiplicities(std::span<const std::int64_t> d, std::int64_t j) {
  std::vector<BigInt> counts{1};
  for (auto v : d) {
    std::vector<BigInt> next(counts.size() + static_cast<std::size_t>((j - 1) * v));
    for (std::size_t base = 0; base < counts.size(); ++base) {
      if (counts[base] == 0) continue;
      for (std::int64_t r = 0; r < j; ++r) next[base + static_cast<std::size_t>(r * v)] += counts[base];
    }
    counts = std::move(next);
  }
  return counts;
}

CyclotomicElement inverse_root_product(std::span<const std::int64_t> d, std::int64_t j) {
  CyclotomicElement prod = CyclotomicElement::one(j);
  for (auto v : d) prod *= CyclotomicElement::one(j) - root_power(j, v);
  return prod.inverse();
}

}  // namespace

RationalPolynomial polynomial_part(const SummandSet& d) {
  const auto m = static_cast<unsigned>(d.size());
  const Rational scale = Rational(1) / (Rational(factorial(m - 1)) * Rational(d.product()));
  return (bernoulli_higher(m - 1, d).shift(Rational(d.sum())) * scale).with_variable('s');
}

Quasipolynomial wave_bernoulli(const SummandSet& d, std::int64_t j) {
  const WaveIndex w = WaveIndex::make(j, d);
  const RationalPolynomial base = polynomial_part(modified_set(w));
  const auto counts = shift_multiplicities(w.nondivisible, j);

  Quasipolynomial wave = Quasipolynomial::zero(j);
  for (std::size_t shift = 0; shift < counts.size(); ++shift) {
    if (counts[shift] == 0) continue;
    const auto offset = static_cast<std::int64_t>(shift);
    const RationalPolynomial shifted = base.shift(Rational(-offset));
    for (std::int64_t c = 0; c < j; ++c) {
      const std::int64_t psi = circulator(j, c - offset);
      if (psi == 0) continue;
      wave.mutable_residue(c) += shifted * (Rational(counts[shift]) * Rational(psi));
    }
  }
  enforce_degree_bound(wave, w.weight(), j);
  return wave;
}

Quasipolynomial wave_eulerian(const SummandSet& d, std::int64_t j, EulerianForm form) {
  const WaveIndex w = WaveIndex::make(j, d);
  const auto k = static_cast<unsigned>(w.weight());
  const SummandSet divisible(w.divisible);
  const Rational scale =
      Rational(1) / (Rational(factorial(k - 1)) * Rational(divisible.product()));
  const Rational s_m(d.sum());

  EulerianContext ctx(root_power(j, 1));
  const auto eulerian = ctx.higher_table(k - 1, w.nondivisible);
  const auto bernoulli = bernoulli_higher_table(k - 1, w.divisible);
  const CyclotomicElement weight_factor = inverse_root_product(w.nondivisible, j);

  Quasipolynomial wave = Quasipolynomial::zero(j);
  for (std::int64_t c = 0; c < j; ++c) {
    const CyclotomicElement root_weight = root_power(j, -c) * weight_factor;
    RationalPolynomial acc(Rational{}, 's');
    for (unsigned n = 0; n < k; ++n) {
      const Rational binom(binomial(k - 1, n));
      const auto& h = eulerian[k - 1 - n];
      if (form == EulerianForm::kNumbers) {
        const Rational traced = primitive_trace(root_weight * h.coeff(0));
        acc += bernoulli[n].shift(s_m).with_variable('s') * (binom * traced);
      } else {
        const CyclotomicElement shift = CyclotomicElement::rational(j, s_m);
        const RationalPolynomial traced = primitive_trace(h.shift(shift) * root_weight);
        acc += traced * (binom * bernoulli[n].coeff(0));
      }
    }
    wave.mutable_residue(c) = acc * scale;
  }
  enforce_degree_bound(wave, w.weight(), j);
  return wave;
}

std::vector<std::pair<std::int64_t, Quasipolynomial>> all_waves(const SummandSet& d,
                                                                AssembleOptions options) {
  const auto compute = [&d, route = options.route](std::int64_t j) {
    return route == WaveRoute::kBernoulli ? wave_bernoulli(d, j) : wave_eulerian(d, j);
  };
  std::vector<std::pair<std::int64_t, Quasipolynomial>> out;
  const auto periods = divisor_union(d);
  if (!options.parallel) {
    for (auto j : periods) out.emplace_back(j, compute(j));
    return out;
  }
  std::vector<std::future<Quasipolynomial>> pending;
  pending.reserve(periods.size());
  for (auto j : periods) pending.push_back(std::async(std::launch::async, compute, j));
  for (std::size_t i = 0; i < periods.size(); ++i) out.emplace_back(periods[i], pending[i].get());
  return out;
}

Quasipolynomial assemble(const SummandSet& d, AssembleOptions options) {
  const std::int64_t period = lcm_of(d.distinct());
  Quasipolynomial total = Quasipolynomial::zero(period);
  for (const auto& [j, wave] : all_waves(d, options)) total = total + wave;
  if (total.max_degree() > static_cast<int>(d.size()) - 1) {
    throw std::logic_error("assembled quasipolynomial exceeds degree m-1");
  }
  return total;
}

bool BridgeReport::holds() const {
  for (const auto& [root, ok] : per_root) {
    if (!ok) return false;
  }
  return !per_root.empty();
}

BridgeReport eulerian_bernoulli_bridge_check(std::int64_t j, const SummandSet& d, unsigned n) {
  const WaveIndex w = WaveIndex::make(j, d);
  const auto m = static_cast<unsigned>(d.size());
  const auto k = static_cast<unsigned>(w.weight());
  if (n >= k) throw std::domain_error("bridge order n must be below the weight k_j");
  const auto rest = static_cast<unsigned>(m - k);

  BigInt pi_k = 1, pi_m = d.product();
  for (auto v : w.divisible) pi_k *= static_cast<long>(v);
  std::int64_t rest_sum = 0;
  for (auto v : w.nondivisible) rest_sum += v;
  const Rational prefactor = Rational(factorial(m - 1 - n) * pi_m) / Rational(factorial(k - 1 - n) * pi_k);

  std::vector<std::int64_t> scaled;
  for (auto v : w.nondivisible) scaled.push_back(v * j);
  const RationalPolynomial bern = bernoulli_higher_table(m - 1 - n, scaled)[m - 1 - n];
  const auto counts = shift_multiplicities(w.nondivisible, j);
  BigInt j_pow = 1;
  for (unsigned i = 0; i < rest; ++i) j_pow *= static_cast<long>(j);

  BridgeReport report;
  for (std::int64_t a = 1; a <= j; ++a) {
    if (std::gcd(a, j) != 1) continue;
    const CyclotomicElement rho = root_power(j, a);
    EulerianContext ctx(rho);
    CyclotomicElement denom = CyclotomicElement::one(j);
    for (auto v : w.nondivisible) denom *= CyclotomicElement::one(j) - rho.pow(v);
    const CyclotomicElement lhs = rho.pow(rest_sum) * prefactor *
                                  ctx.higher(k - 1 - n, w.nondivisible).coeff(0) / denom;

    CyclotomicElement rhs = CyclotomicElement::zero(j);
    for (std::size_t shift = 0; shift < counts.size(); ++shift) {
      if (counts[shift] == 0) continue;
      const auto offset = static_cast<std::int64_t>(shift);
      rhs += rho.pow(-offset) * (Rational(counts[shift]) * bern.eval(Rational(offset)));
    }
    rhs *= Rational(1) / Rational(j_pow);
    report.per_root.emplace_back(a, lhs == rhs);
  }
  return report;
}

}  // namespace sylvester
