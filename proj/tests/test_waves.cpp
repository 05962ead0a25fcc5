#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <future>
#include <random>

#include "sylvester/bernoulli.hpp"
#include "sylvester/cyclotomic.hpp"
#include "sylvester/numtheory.hpp"
#include "sylvester/oracle.hpp"
#include "sylvester/waves.hpp"
#include "test_support.hpp"

using namespace sylvester;
using P = Polynomial<Rational>;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

P sp(std::initializer_list<Rational> c) { return P(std::vector<Rational>(c), Rational{}, 's'); }

Quasipolynomial quasi(std::vector<P> classes) {
  const auto period = static_cast<std::int64_t>(classes.size());
  return Quasipolynomial(period, std::move(classes));
}

// The wave written with the r_i + 1 indexing: the Bernoulli polynomial of the
// modified set at s + s_m + sum(d_i r_i), scaled by 1/((m-1)! pi_m j^(m-k)),
// weighted by the circulator at s + sum(d_i (r_i + 1)). Enumerates every
// tuple directly.
Quasipolynomial wave_unit_offset_form(const SummandSet& d, std::int64_t j) {
  const WaveIndex w = WaveIndex::make(j, d);
  const SummandSet mod = modified_set(w);
  const auto m = static_cast<unsigned>(d.size());
  const P bern = bernoulli_higher(m - 1, mod).with_variable('s');
  const Rational scale = Rational(1) / Rational(factorial(m - 1) * mod.product());
  const auto& rest = w.nondivisible;
  Quasipolynomial out = Quasipolynomial::zero(j);
  std::vector<std::int64_t> r(rest.size());
  while (true) {
    std::int64_t dr = 0, dr1 = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      dr += rest[i] * r[i];
      dr1 += rest[i] * (r[i] + 1);
    }
    const P term = bern.shift(Rational(d.sum() + dr)) * scale;
    for (std::int64_t c = 0; c < j; ++c) {
      out.mutable_residue(c) += term * Rational(circulator(j, c + dr1));
    }
    std::size_t i = 0;
    for (; i < r.size(); ++i) {
      if (++r[i] < j) break;
      r[i] = 0;
    }
    if (i == r.size()) break;
  }
  return out;
}

std::vector<SummandSet> small_corpus() {
  std::vector<SummandSet> out;
  for (auto v : std::vector<std::vector<std::int64_t>>{
           {1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {2, 4, 6}, {3, 4, 6}, {4, 6, 8}}) {
    out.emplace_back(v);
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 12; ++i) out.emplace_back(testing::random_summands(rng, 4, 8));
  return out;
}

}  // namespace

TEST_CASE("polynomial_part") {
  CHECK(polynomial_part(SummandSet({1})) == sp({q(1)}));
  CHECK(polynomial_part(SummandSet({1, 1})) == sp({q(1), q(1)}));
  CHECK(polynomial_part(SummandSet({1, 2})) == sp({q(3, 4), q(1, 2)}));
  for (const auto& d : small_corpus()) {
    CHECK(polynomial_part(d).degree() == static_cast<int>(d.size()) - 1);
  }
}

TEST_CASE("polynomial part satisfies the partition recursion") {
  for (const auto& d : small_corpus()) {
    if (d.size() < 2) continue;
    const std::int64_t last = d.elements().back();
    const P w1 = polynomial_part(d);
    CHECK(w1 - w1.shift(Rational(-last)) == polynomial_part(d.without(last)));
  }
}

TEST_CASE("wave_bernoulli examples") {
  const SummandSet one_two({1, 2});
  CHECK(wave_bernoulli(one_two, 1) == quasi({polynomial_part(one_two)}));
  CHECK(wave_bernoulli(one_two, 2) == quasi({sp({q(1, 4)}), sp({q(-1, 4)})}));
  CHECK(wave_bernoulli(SummandSet({2, 2}), 2) ==
        quasi({sp({q(1, 2), q(1, 4)}), sp({q(-1, 2), q(-1, 4)})}));
  CHECK_THROWS_AS(wave_bernoulli(one_two, 3), std::domain_error);
  CHECK_THROWS_AS(wave_bernoulli(one_two, 0), std::domain_error);
}

TEST_CASE("wave_eulerian examples") {
  const SummandSet one_two({1, 2});
  for (auto form : {EulerianForm::kNumbers, EulerianForm::kPolynomials}) {
    CHECK(wave_eulerian(one_two, 2, form) == quasi({sp({q(1, 4)}), sp({q(-1, 4)})}));
    CHECK(wave_eulerian(SummandSet({2, 2}), 2, form) ==
          quasi({sp({q(1, 2), q(1, 4)}), sp({q(-1, 2), q(-1, 4)})}));
    for (const auto& d : small_corpus()) {
      CHECK(wave_eulerian(d, 1, form) == quasi({polynomial_part(d)}));
    }
  }
  CHECK_THROWS_AS(wave_eulerian(one_two, 4), std::domain_error);
}

TEST_CASE("all wave formulas agree and respect the weight bound") {
  for (const auto& d : small_corpus()) {
    for (auto j : divisor_union(d)) {
      const auto bern = wave_bernoulli(d, j);
      const int weight = WaveIndex::make(j, d).weight();
      CHECK(bern.period() == j);
      CHECK(bern.max_degree() <= weight - 1);
      CHECK(wave_eulerian(d, j, EulerianForm::kNumbers) == bern);
      CHECK(wave_eulerian(d, j, EulerianForm::kPolynomials) == bern);
      CHECK(wave_unit_offset_form(d, j) == bern);
    }
  }
}

TEST_CASE("assemble examples") {
  const auto w12 = assemble(SummandSet({1, 2}));
  CHECK(w12 == quasi({sp({q(1), q(1, 2)}), sp({q(1, 2), q(1, 2)})}));
  CHECK(assemble(SummandSet({1})) == quasi({sp({q(1)})}));

  const auto w123 = assemble(SummandSet({1, 2, 3}));
  CHECK(w123.period() == 6);
  const std::vector<long> expected{1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19};
  for (std::size_t s = 0; s < expected.size(); ++s) {
    CHECK(w123.evaluate(BigInt(static_cast<unsigned long>(s))) == q(expected[s]));
  }
}

TEST_CASE("evaluate") {
  CHECK(assemble(SummandSet({1, 2})).evaluate(4) == q(3));
  CHECK(assemble(SummandSet({1, 2, 3})).evaluate(6) == q(7));
  for (const auto& d : small_corpus()) CHECK(assemble(d).evaluate(0) == q(1));
  CHECK_THROWS_AS(assemble(SummandSet({1, 2})).evaluate(-1), std::domain_error);
}

TEST_CASE("assembled quasipolynomial matches DP, is integral and satisfies the recursion") {
  for (const auto& d : small_corpus()) {
    const auto w = assemble(d);
    CHECK(w.period() == lcm_of(d.distinct()));
    CHECK(w.max_degree() <= static_cast<int>(d.size()) - 1);
    const auto table = dp_count(d, 200);
    for (unsigned long s = 0; s <= 200; ++s) {
      const Rational v = w.evaluate(s);
      CHECK(v.is_integer());
      CHECK(v == Rational(table.counts[s]));
    }
    if (d.size() < 2) continue;
    const std::int64_t last = d.elements().back();
    const auto smaller = assemble(d.without(last));
    for (unsigned long s = static_cast<unsigned long>(last); s <= 200; ++s) {
      CHECK(w.evaluate(s) - w.evaluate(s - static_cast<unsigned long>(last)) == smaller.evaluate(s));
    }
  }
}

TEST_CASE("assembly is independent of order, route and threading") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    auto v = testing::random_summands(rng, 4, 8);
    const auto ref = assemble(SummandSet(v));
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(assemble(SummandSet(v)) == ref);
    CHECK(assemble(SummandSet(v), {WaveRoute::kBernoulli, false}) == ref);
    CHECK(assemble(SummandSet(v), {WaveRoute::kEulerian, true}) == ref);
  }
}

TEST_CASE("eulerian_bernoulli_bridge_check") {
  CHECK(eulerian_bernoulli_bridge_check(2, SummandSet({1, 2}), 0).holds());
  CHECK(eulerian_bernoulli_bridge_check(3, SummandSet({1, 3}), 0).holds());
  CHECK(eulerian_bernoulli_bridge_check(2, SummandSet({2, 3}), 0).holds());
  const auto report = eulerian_bernoulli_bridge_check(5, SummandSet({1, 2, 5, 10}), 1);
  CHECK(report.per_root.size() == 4);
  CHECK(report.holds());
  CHECK_THROWS_AS(eulerian_bernoulli_bridge_check(2, SummandSet({1, 2}), 1), std::domain_error);
}

TEST_CASE("quasipolynomial JSON") {
  const SummandSet d({1, 2});
  const auto w = assemble(d);
  const auto j = w.to_json(d);
  CHECK(j["summands"] == nlohmann::json::array({1, 2}));
  CHECK(j["period"] == 2);
  CHECK(j["classes"][0]["residue"] == 0);
  CHECK(j["classes"][0]["coeffs"] == nlohmann::json::array({"1", "1/2"}));
  CHECK(j["classes"][1]["coeffs"] == nlohmann::json::array({"1/2", "1/2"}));
  for (const auto& set : small_corpus()) {
    const auto a = assemble(set);
    CHECK(Quasipolynomial::from_json(a.to_json(set)) == a);
  }
}

TEST_CASE("quasipolynomial lifting and sums") {
  const auto w = assemble(SummandSet({2, 3}));
  const auto lifted = w.lift(12);
  for (unsigned long s = 0; s < 50; ++s) CHECK(lifted.evaluate(s) == w.evaluate(s));
  CHECK_THROWS_AS(w.lift(9), std::invalid_argument);
  CHECK((Quasipolynomial::zero(4) + w).period() == 12);
  CHECK(to_string(sp({q(3), q(-1), q(1, 2)})) == "1/2*s^2 - s + 3");
}

TEST_CASE("shared caches tolerate concurrent fills") {
  std::vector<std::future<Quasipolynomial>> jobs;
  for (int i = 0; i < 8; ++i) {
    jobs.push_back(std::async(std::launch::async, [i] {
      (void)bernoulli_number(static_cast<unsigned>(20 + i));
      (void)cyclotomic_polynomial(30 + i);
      return assemble(SummandSet({2, 3, 5, 7}), {i % 2 ? WaveRoute::kEulerian : WaveRoute::kBernoulli, true});
    }));
  }
  const auto ref = jobs.front().get();
  for (std::size_t i = 1; i < jobs.size(); ++i) CHECK(jobs[i].get() == ref);
  CHECK(bernoulli_number(20) == Rational(BigInt(-174611), BigInt(330)));
}
