#pragma once

#include <cstddef>
#include <vector>

#include "sylvester/rational.hpp"
#include "sylvester/summands.hpp"

namespace sylvester {

/// Exact partition counts W(s, d) for s = 0..counts.size()-1.
struct CountTable {
  SummandSet summands;
  std::vector<BigInt> counts;
};

/// Adds one summand at a time: W(s, d^m) = W(s - d_m, d^m) + W(s, d^{m-1}),
/// starting from the empty set (1 at s = 0, else 0).
CountTable dp_count(const SummandSet& d, std::size_t max_s);

/// Coefficients of prod_i sum_k t^{k d_i}, truncated at degree max_s.
CountTable series_count(const SummandSet& d, std::size_t max_s);

}  // namespace sylvester
