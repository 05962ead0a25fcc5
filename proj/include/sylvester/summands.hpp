#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sylvester/rational.hpp"

namespace sylvester {

/// Multiset of positive summands d_1..d_m, kept in ascending order.
class SummandSet {
 public:
  /// Throws std::invalid_argument if empty or any element is < 1.
  explicit SummandSet(std::vector<std::int64_t> elements);

  /// Parses "1,2,3" (duplicates allowed).
  static SummandSet parse(const std::string& csv);

  std::span<const std::int64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::int64_t sum() const { return sum_; }
  const BigInt& product() const { return product_; }
  std::vector<std::int64_t> distinct() const;

  /// The set with one occurrence of `value` removed; throws if that would
  /// leave it empty or `value` is absent.
  SummandSet without(std::int64_t value) const;

  std::string to_string() const;

  friend bool operator==(const SummandSet& a, const SummandSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t sum_ = 0;
  BigInt product_ = 1;
};

/// Split of a summand set with respect to a wave period j: the elements j
/// divides (their count is the weight k_j) and the rest.
struct WaveIndex {
  std::int64_t period;
  std::vector<std::int64_t> divisible;
  std::vector<std::int64_t> nondivisible;

  /// Throws std::domain_error if j < 1 or j divides no element.
  static WaveIndex make(std::int64_t j, const SummandSet& d);

  int weight() const { return static_cast<int>(divisible.size()); }
};

/// Divisible elements kept, the rest multiplied by j.
SummandSet modified_set(const WaveIndex& w);

}  // namespace sylvester
