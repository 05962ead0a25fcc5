#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sylvester/numtheory.hpp"
#include "sylvester/summands.hpp"
#include "test_support.hpp"

using namespace sylvester;

TEST_CASE("factorize") {
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(60) == Factorization{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::domain_error);
  CHECK_THROWS_AS(factorize(-4), std::domain_error);

  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t product = 1, last = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(p > last);
      last = p;
      for (int i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("totient and moebius") {
  CHECK(totient(1) == 1);
  CHECK(moebius(1) == 1);
  CHECK(totient(6) == 2);
  CHECK(moebius(6) == 1);
  CHECK(totient(9) == 6);
  CHECK(moebius(9) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(totient(0), std::domain_error);
  CHECK_THROWS_AS(moebius(-1), std::domain_error);
  // Gauss: sum_{d|n} phi(d) = n.
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::int64_t total = 0;
    for (auto d : divisors(n)) total += totient(d);
    CHECK(total == n);
  }
}

TEST_CASE("divisor_union") {
  CHECK(divisor_union(SummandSet({1, 2})) == std::vector<std::int64_t>{1, 2});
  CHECK(divisor_union(SummandSet({6, 10, 15})) == std::vector<std::int64_t>{1, 2, 3, 5, 6, 10, 15});
  CHECK(divisor_union(SummandSet({1})) == std::vector<std::int64_t>{1});
  CHECK(divisor_union(SummandSet({4, 4, 2})) == std::vector<std::int64_t>{1, 2, 4});
}

TEST_CASE("circulator known values") {
  CHECK(circulator(2, 0) == 1);
  CHECK(circulator(2, 1) == -1);
  for (std::int64_t s = -7; s <= 7; ++s) CHECK(circulator(1, s) == 1);
  CHECK(circulator(4, 0) == 2);
  CHECK(circulator(4, 1) == 0);
  CHECK(circulator(4, 2) == -2);
  CHECK(circulator(4, 3) == 0);
  CHECK(circulator(6, 0) == 2);
  CHECK(circulator(6, 1) == 1);
  CHECK(circulator(6, 2) == -1);
  CHECK(circulator(6, 3) == -2);
  CHECK_THROWS_AS(circulator(0, 1), std::domain_error);
}

TEST_CASE("circulator properties") {
  for (std::int64_t j = 1; j <= 90; ++j) {
    CHECK(circulator(j, 0) == totient(j));
    CHECK(circulator(j, 1) == moebius(j));
    std::int64_t period_sum = 0;
    for (std::int64_t s = 0; s < j; ++s) {
      period_sum += circulator(j, s);
      CHECK(circulator(j, s) == circulator(j, s + 3 * j));
      CHECK(circulator(j, s) == circulator(j, s - 5 * j));
      // Independent Moebius-sum formula for the same quantity.
      CHECK(circulator(j, s) == testing::ramanujan_sum(j, s));
    }
    if (j > 1) CHECK(period_sum == 0);
  }
}

TEST_CASE("floor_mod is the mathematical remainder") {
  CHECK(floor_mod(-1, 4) == 3);
  CHECK(floor_mod(-8, 4) == 0);
  CHECK(floor_mod(9, 4) == 1);
}
