#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylvester/polynomial.hpp"
#include "sylvester/rational.hpp"
#include "sylvester/summands.hpp"

namespace sylvester {

/// One rational polynomial in s per residue class modulo `period`. The value
/// at integer s is class (s mod period) evaluated at s itself.
class Quasipolynomial {
 public:
  /// Throws std::invalid_argument unless classes.size() == period >= 1.
  Quasipolynomial(std::int64_t period, std::vector<Polynomial<Rational>> classes);

  static Quasipolynomial zero(std::int64_t period);

  std::int64_t period() const { return period_; }
  const std::vector<Polynomial<Rational>>& classes() const { return classes_; }
  const Polynomial<Rational>& at_residue(std::int64_t r) const;
  Polynomial<Rational>& mutable_residue(std::int64_t r);

  int max_degree() const;

  /// Throws std::domain_error for negative s.
  Rational evaluate(const BigInt& s) const;

  /// Same function with period `multiple`, which must be a multiple of
  /// period().
  Quasipolynomial lift(std::int64_t multiple) const;

  /// Classwise sum at period lcm(a.period(), b.period()).
  friend Quasipolynomial operator+(const Quasipolynomial& a, const Quasipolynomial& b);
  friend bool operator==(const Quasipolynomial& a, const Quasipolynomial& b) = default;

  /// { "summands": [...], "period": L, "classes": [ {"residue": r,
  /// "coeffs": ["p/q", ...]} ] } with coefficients in ascending degree;
  /// integers are emitted as JSON numbers, coefficients as strings.
  nlohmann::json to_json(const SummandSet& summands) const;
  static Quasipolynomial from_json(const nlohmann::json& j);

 private:
  std::int64_t period_;
  std::vector<Polynomial<Rational>> classes_;
};

/// Human-readable form, highest degree first, e.g. "1/2*s^2 - s + 3".
std::string to_string(const Polynomial<Rational>& p);

}  // namespace sylvester
