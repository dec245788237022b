#include "piset/spectrum.hpp"

#include <algorithm>

#include "piset/errors.hpp"

namespace piset {

SpectrumSet SpectrumSet::from_values(std::vector<Natural> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() || values.front() != 1) throw InvalidInput("a spectrum must contain 1");
  SpectrumSet result(std::move(values));
  // Closed under divisors iff closed under removing one prime factor.
  for (Natural v : result.values_) {
    for (const auto& [prime, exponent] : factorize(v)) {
      (void)exponent;
      if (!result.contains(v / prime))
        throw InvalidInput("spectrum is not divisor-closed: " + piset::to_string(v) + " present but " +
                           piset::to_string(v / prime) + " missing");
    }
  }
  return result;
}

SpectrumSet SpectrumSet::closure_of(const std::vector<Natural>& generators) {
  std::vector<Natural> values{1};
  for (Natural g : generators) {
    if (g == 0) throw InvalidInput("element orders are positive");
    for (Natural d : divisors(g)) values.push_back(d);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return SpectrumSet(std::move(values));
}

bool SpectrumSet::contains(Natural v) const { return std::binary_search(values_.begin(), values_.end(), v); }

SpectrumSet SpectrumSet::intersect(const SpectrumSet& other) const {
  std::vector<Natural> common;
  std::set_intersection(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                        std::back_inserter(common));
  return SpectrumSet(std::move(common));
}

bool SpectrumSet::disjoint_from(const std::vector<Natural>& candidates) const {
  return std::none_of(candidates.begin(), candidates.end(), [this](Natural c) { return contains(c); });
}

std::string SpectrumSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ", ";
    out += piset::to_string(values_[i]);
  }
  return out + "}";
}

}  // namespace piset
