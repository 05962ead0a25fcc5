#include "sylvester/summands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sylvester {

SummandSet::SummandSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("summand set must not be empty");
  for (auto v : elements_) {
    if (v < 1) throw std::invalid_argument("summands must be positive, got " + std::to_string(v));
  }
  std::sort(elements_.begin(), elements_.end());
  for (auto v : elements_) {
    sum_ += v;
    product_ *= static_cast<long>(v);
  }
}

SummandSet SummandSet::parse(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    const BigInt v = parse_bigint(item);
    if (!v.fits_slong_p()) throw std::invalid_argument("summand out of range: " + item);
    values.push_back(v.get_si());
  }
  if (!csv.empty() && csv.back() == ',') throw std::invalid_argument("trailing comma in summands");
  return SummandSet(std::move(values));
}

std::vector<std::int64_t> SummandSet::distinct() const {
  std::vector<std::int64_t> out = elements_;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SummandSet SummandSet::without(std::int64_t value) const {
  auto copy = elements_;
  auto it = std::find(copy.begin(), copy.end(), value);
  if (it == copy.end()) throw std::invalid_argument("value not in summand set");
  copy.erase(it);
  return SummandSet(std::move(copy));
}

std::string SummandSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

WaveIndex WaveIndex::make(std::int64_t j, const SummandSet& d) {
  if (j < 1) throw std::domain_error("wave period must be positive");
  WaveIndex w{j, {}, {}};
  for (auto v : d.elements()) (v % j == 0 ? w.divisible : w.nondivisible).push_back(v);
  if (w.divisible.empty()) {
    throw std::domain_error(std::to_string(j) + " divides no element of " + d.to_string());
  }
  return w;
}

SummandSet modified_set(const WaveIndex& w) {
  std::vector<std::int64_t> out = w.divisible;
  for (auto v : w.nondivisible) out.push_back(v * w.period);
  return SummandSet(std::move(out));
}

}  // namespace sylvester
