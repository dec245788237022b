#pragma once

#include <string>
#include <vector>

#include "piset/numtheory.hpp"

namespace piset {

/// The set of element orders of a finite group: sorted, contains 1, and
/// closed under taking divisors.
class SpectrumSet {
 public:
  /// Spectrum of the trivial group, {1}.
  SpectrumSet() : values_{1} {}

  /// Sorts and deduplicates; throws InvalidInput if 1 is missing or some
  /// divisor of a member is absent.
  static SpectrumSet from_values(std::vector<Natural> values);

  /// Divisor closure of `generators` (always includes 1).
  static SpectrumSet closure_of(const std::vector<Natural>& generators);

  const std::vector<Natural>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(Natural v) const;
  Natural max() const noexcept { return values_.back(); }

  SpectrumSet intersect(const SpectrumSet& other) const;
  /// True iff no member of `candidates` occurs in the spectrum.
  bool disjoint_from(const std::vector<Natural>& candidates) const;

  /// "{1, 2, 3, 5}"
  std::string to_string() const;

  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;

 private:
  explicit SpectrumSet(std::vector<Natural> sorted) : values_(std::move(sorted)) {}
  std::vector<Natural> values_;
};

}  // namespace piset
