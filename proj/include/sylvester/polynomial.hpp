#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sylvester {

/// Exact coefficient field. Elements carry their own field context (e.g. the
/// conductor of a cyclotomic element), so zero/one are produced "like" an
/// existing element and mixing incompatible fields is detectable.
template <class T>
concept Field = std::copyable<T> && requires(const T a, const T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { same_field(a, b) } -> std::convertible_to<bool>;
};

namespace detail {
// Unqualified so ADL finds the field's is_zero; Polynomial::is_zero would
// otherwise hide it inside the class.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial; coefficient i multiplies var^i. The zero
/// polynomial has no coefficients, so structural and mathematical equality
/// coincide.
template <Field T>
class Polynomial {
 public:
  Polynomial()
    requires std::default_initializable<T>
  : zero_{} {}

  explicit Polynomial(T zero, char variable = 'x')
      : zero_(zero_like(zero)), variable_(variable) {}

  Polynomial(std::vector<T> coeffs, T zero, char variable = 'x')
      : coeffs_(std::move(coeffs)), zero_(zero_like(zero)), variable_(variable) {
    for (const auto& c : coeffs_) check_field(c);
    normalize();
  }

  Polynomial(std::initializer_list<T> coeffs)
    requires std::default_initializable<T>
  : Polynomial(std::vector<T>(coeffs), T{}) {}

  static Polynomial constant(const T& c, char variable = 'x') {
    return Polynomial({c}, c, variable);
  }

  static Polynomial monomial(const T& c, std::size_t power, char variable = 'x') {
    std::vector<T> coeffs(power + 1, zero_like(c));
    coeffs[power] = c;
    return Polynomial(std::move(coeffs), c, variable);
  }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const T> coeffs() const { return coeffs_; }
  const T& zero() const { return zero_; }
  char variable() const { return variable_; }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
  const T& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Polynomial with_variable(char variable) const {
    Polynomial r = *this;
    r.variable_ = variable;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const T& c) {
    check_field(c);
    if (detail::coeff_is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x = x * c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial(a.zero_, a.variable_) - a; }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_, a.variable_);
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
        out[i + k] = out[i + k] + a.coeffs_[i] * b.coeffs_[k];
      }
    }
    return Polynomial(std::move(out), a.zero_, a.variable_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
  }

  /// Horner evaluation.
  T eval(const T& v) const {
    check_field(v);
    T acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  /// Returns q with q(x) = p(x + a).
  Polynomial shift(const T& a) const {
    check_field(a);
    if (coeffs_.size() < 2 || detail::coeff_is_zero(a)) return *this;
    // Repeated synthetic division (Taylor shift); exact and O(n^2).
    std::vector<T> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t k = n - 1; k-- > i;) c[k] = c[k] + a * c[k + 1];
    }
    return Polynomial(std::move(c), zero_, variable_);
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  void check_field(const T& c) const {
    if (!same_field(zero_, c)) throw std::invalid_argument("coefficient field mismatch");
  }

  void check_compatible(const Polynomial& o) const {
    if (variable_ != o.variable_) throw std::invalid_argument("polynomial variable mismatch");
    check_field(o.zero_);
  }

  std::vector<T> coeffs_;
  T zero_;
  char variable_ = 'x';
};

/// Euclidean division: returns (q, r) with a = b*q + r, deg r < deg b.
template <Field T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const T& zero = a.zero();
  std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>(zero, a.variable()), a};
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), zero);
  const T lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const T c = rem[i] / lead;
    quot[i - db] = c;
    if (is_zero(c)) continue;
    for (int k = 0; k <= db; ++k) rem[i - db + k] = rem[i - db + k] - c * b.coeffs()[k];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quot), zero, a.variable()),
          Polynomial<T>(std::move(rem), zero, a.variable())};
}

}  // namespace sylvester
