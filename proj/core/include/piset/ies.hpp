#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "piset/catalog.hpp"
#include "piset/spectrum.hpp"

namespace piset {

/// A finite set T of integers >= 2, sorted and deduplicated.
class CandidateSet {
 public:
  /// Throws InvalidInput if empty or if any member is below 2 (1 is an
  /// element order of every group, so such a T says nothing).
  explicit CandidateSet(std::vector<std::uint64_t> values);

  /// Parses "3,5" / "3, 5". Rejects negatives, zero, one and junk.
  static CandidateSet parse(const std::string& csv);

  const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(std::uint64_t v) const;
  bool includes(const std::vector<std::uint64_t>& subset) const;
  std::vector<Natural> as_naturals() const { return {values_.begin(), values_.end()}; }
  std::string to_string() const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

struct IESVerdict {
  CandidateSet set;
  bool is_ies = false;
  /// {2}, {3,4} or {3,5} when is_ies; empty otherwise.
  std::vector<std::uint64_t> basis;
  /// Non-solvable group whose spectrum misses T (witness() only).
  std::optional<GroupSpec> witness;
  std::optional<SpectrumSet> witness_spectrum;
  /// Candidates examined by the witness scan, in order.
  std::vector<GroupSpec> scanned;
  bool checked_disjoint = false;
};

/// T is IES iff it contains {2}, {3,4} or {3,5}; the basis reported is the
/// first match in that order.
IESVerdict classify(const CandidateSet& set);

/// For a non-IES set, scans L2(2^p) over primes p = 2, 3, 5, ... (when 3 is
/// not in T) or Sz(2^p) over odd primes (when 3 is in T) and returns the first
/// group whose spectrum misses T. Throws InvalidInput for IES sets and
/// std::logic_error if more than |T| + 1 candidates were needed.
IESVerdict witness(const CandidateSet& set);

struct CorpusEntry {
  std::string name;
  std::uint64_t order = 0;
  bool skipped = false;
  std::string note;  // reason for skipping
  std::optional<SpectrumSet> spectrum;
  bool disjoint = false;
  bool solvable = false;
  bool violation() const noexcept { return !skipped && disjoint && !solvable; }
};

struct EmpiricalReport {
  CandidateSet set;
  bool classified_ies = false;
  std::vector<CorpusEntry> entries;
  std::vector<std::string> violations;  // names of violating groups
};

/// Tests "T misses the spectrum => solvable" on every corpus group that fits
/// under `cap`: A5, minimal_simple_specs(bound), and a solvable battery
/// (C6, D8, S3, S4, A4). Spectra and solvability come from enumeration.
EmpiricalReport empirical_check(const CandidateSet& set, std::uint64_t bound, std::uint64_t cap = kDefaultCap);

/// The solvable battery used by empirical_check, as (name, group) pairs.
std::vector<std::pair<std::string, Group>> solvable_battery();

}  // namespace piset
