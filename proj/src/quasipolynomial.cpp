#include "sylvester/quasipolynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sylvester/numtheory.hpp"

namespace sylvester {

Quasipolynomial::Quasipolynomial(std::int64_t period, std::vector<Polynomial<Rational>> classes)
    : period_(period), classes_(std::move(classes)) {
  if (period_ < 1 || classes_.size() != static_cast<std::size_t>(period_)) {
    throw std::invalid_argument("quasipolynomial needs exactly one class per residue");
  }
  for (auto& c : classes_) c = c.with_variable('s');
}

Quasipolynomial Quasipolynomial::zero(std::int64_t period) {
  if (period < 1) throw std::invalid_argument("period must be positive");
  return Quasipolynomial(period, std::vector<Polynomial<Rational>>(static_cast<std::size_t>(period)));
}

const Polynomial<Rational>& Quasipolynomial::at_residue(std::int64_t r) const {
  return classes_[static_cast<std::size_t>(floor_mod(r, period_))];
}

Polynomial<Rational>& Quasipolynomial::mutable_residue(std::int64_t r) {
  return classes_[static_cast<std::size_t>(floor_mod(r, period_))];
}

int Quasipolynomial::max_degree() const {
  int d = -1;
  for (const auto& c : classes_) d = std::max(d, c.degree());
  return d;
}

Rational Quasipolynomial::evaluate(const BigInt& s) const {
  if (s < 0) throw std::domain_error("quasipolynomial evaluated at negative s");
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(period_));
  return classes_[r.get_ui()].eval(Rational(s));
}

Quasipolynomial Quasipolynomial::lift(std::int64_t multiple) const {
  if (multiple < 1 || multiple % period_ != 0) {
    throw std::invalid_argument("lift target must be a multiple of the period");
  }
  std::vector<Polynomial<Rational>> out;
  out.reserve(static_cast<std::size_t>(multiple));
  for (std::int64_t r = 0; r < multiple; ++r) out.push_back(at_residue(r));
  return Quasipolynomial(multiple, std::move(out));
}

Quasipolynomial operator+(const Quasipolynomial& a, const Quasipolynomial& b) {
  const std::int64_t l = std::lcm(a.period_, b.period_);
  Quasipolynomial out = a.lift(l);
  for (std::int64_t r = 0; r < l; ++r) out.classes_[static_cast<std::size_t>(r)] += b.at_residue(r);
  return out;
}

nlohmann::json Quasipolynomial::to_json(const SummandSet& summands) const {
  nlohmann::json classes = nlohmann::json::array();
  for (std::int64_t r = 0; r < period_; ++r) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : classes_[static_cast<std::size_t>(r)].coeffs()) coeffs.push_back(c.to_string());
    classes.push_back({{"residue", r}, {"coeffs", std::move(coeffs)}});
  }
  return {{"summands", std::vector<std::int64_t>(summands.elements().begin(), summands.elements().end())},
          {"period", period_},
          {"classes", std::move(classes)}};
}

Quasipolynomial Quasipolynomial::from_json(const nlohmann::json& j) {
  const auto period = j.at("period").get<std::int64_t>();
  if (period < 1) throw std::invalid_argument("period must be positive");
  std::vector<Polynomial<Rational>> classes(static_cast<std::size_t>(period));
  std::vector<bool> seen(static_cast<std::size_t>(period));
  for (const auto& c : j.at("classes")) {
    const auto r = c.at("residue").get<std::int64_t>();
    if (r < 0 || r >= period || seen[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("bad or duplicate residue in quasipolynomial JSON");
    }
    seen[static_cast<std::size_t>(r)] = true;
    std::vector<Rational> coeffs;
    for (const auto& x : c.at("coeffs")) coeffs.push_back(Rational::parse(x.get<std::string>()));
    classes[static_cast<std::size_t>(r)] = Polynomial<Rational>(std::move(coeffs), Rational{}, 's');
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("missing residue class in quasipolynomial JSON");
  }
  return Quasipolynomial(period, std::move(classes));
}

std::string to_string(const Polynomial<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += p.variable();
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace sylvester
