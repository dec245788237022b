#include "piset/ies.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "piset/errors.hpp"

namespace piset {

CandidateSet::CandidateSet(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidInput("a candidate set must be nonempty");
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.front() < 2)
    throw InvalidInput("candidate sets contain integers >= 2 only; " + std::to_string(values_.front()) +
                       " is an element order of every group (or of none)");
}

CandidateSet CandidateSet::parse(const std::string& csv) {
  std::vector<std::uint64_t> values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidInput("empty entry in candidate set '" + csv + "'");
    item = item.substr(first, last - first + 1);
    if (item.front() == '-') throw InvalidInput("negative value " + item + " in candidate set");
    const Natural v = parse_natural(item);
    if (v > UINT64_MAX) throw InvalidInput("candidate value " + item + " is too large");
    values.push_back(static_cast<std::uint64_t>(v));
  }
  return CandidateSet(std::move(values));
}

bool CandidateSet::contains(std::uint64_t v) const { return std::binary_search(values_.begin(), values_.end(), v); }

bool CandidateSet::includes(const std::vector<std::uint64_t>& subset) const {
  return std::all_of(subset.begin(), subset.end(), [this](std::uint64_t v) { return contains(v); });
}

std::string CandidateSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

IESVerdict classify(const CandidateSet& set) {
  static const std::vector<std::vector<std::uint64_t>> kBases = {{2}, {3, 4}, {3, 5}};
  IESVerdict verdict{set, false, {}, std::nullopt, std::nullopt, {}, false};
  for (const auto& basis : kBases) {
    if (set.includes(basis)) {
      verdict.is_ies = true;
      verdict.basis = basis;
      break;
    }
  }
  return verdict;
}

IESVerdict witness(const CandidateSet& set) {
  IESVerdict verdict = classify(set);
  if (verdict.is_ies) throw InvalidInput(set.to_string() + " is IES; no counterexample exists");

  // Spectra along each scan meet pairwise only in {1,2,3} resp. {1,2,4,5},
  // none of which lie in T on that branch, so each member of T rules out at
  // most one candidate.
  const bool suzuki_branch = set.contains(3);
  const std::size_t limit = set.size() + 1;
  for (std::uint64_t p : primes_up_to(126)) {
    if (suzuki_branch && p == 2) continue;
    if (verdict.scanned.size() == limit)
      throw std::logic_error("witness scan for " + set.to_string() + " exceeded " + std::to_string(limit) +
                             " candidates");
    const GroupSpec candidate =
        suzuki_branch ? GroupSpec::sz(static_cast<unsigned>(p)) : GroupSpec::l2_even(static_cast<unsigned>(p));
    verdict.scanned.push_back(candidate);
    const bool blocked = std::any_of(set.values().begin(), set.values().end(),
                                     [&](std::uint64_t t) { return spectrum_contains(candidate, t); });
    if (blocked) continue;

    verdict.witness = candidate;
    verdict.witness_spectrum = spectrum_formula(candidate);
    verdict.checked_disjoint = verdict.witness_spectrum->disjoint_from(set.as_naturals());
    if (!verdict.checked_disjoint)
      throw std::logic_error("membership test and formula spectrum disagree for " + candidate.to_string());
    return verdict;
  }
  throw OutOfRange("witness scan for " + set.to_string() + " ran out of supported parameters");
}

std::vector<std::pair<std::string, Group>> solvable_battery() {
  using P = Permutation;
  std::vector<std::pair<std::string, Group>> battery;
  battery.emplace_back("C6", Group::from_permutations({P::from_cycles(6, {{0, 1, 2, 3, 4, 5}})}));
  battery.emplace_back("D8", Group::from_permutations({P::from_cycles(4, {{0, 1, 2, 3}}), P::from_cycles(4, {{0, 2}})}));
  battery.emplace_back("S3", Group::from_permutations({P::from_cycles(3, {{0, 1}}), P::from_cycles(3, {{0, 1, 2}})}));
  battery.emplace_back("S4", Group::from_permutations({P::from_cycles(4, {{0, 1}}), P::from_cycles(4, {{0, 1, 2, 3}})}));
  battery.emplace_back("A4", Group::from_permutations({P::from_cycles(4, {{0, 1, 2}}), P::from_cycles(4, {{1, 2, 3}})}));
  return battery;
}

EmpiricalReport empirical_check(const CandidateSet& set, std::uint64_t bound, std::uint64_t cap) {
  EmpiricalReport report{set, classify(set).is_ies, {}, {}};
  const std::vector<Natural> targets = set.as_naturals();

  auto record = [&](CorpusEntry entry, const Group& group) {
    try {
      entry.spectrum = spectrum_enumerate(group, cap);
      entry.order = enumerate(group, cap).size();
      entry.solvable = is_solvable(group, cap).solvable;
      entry.disjoint = entry.spectrum->disjoint_from(targets);
    } catch (const CapExceeded& e) {
      entry.skipped = true;
      entry.note = e.what();
      entry.spectrum.reset();
    }
    if (entry.violation()) report.violations.push_back(entry.name);
    report.entries.push_back(std::move(entry));
  };

  std::vector<GroupSpec> specs{GroupSpec::alt(5)};
  for (const GroupSpec& s : minimal_simple_specs(bound)) specs.push_back(s);
  for (const GroupSpec& spec : specs) {
    CorpusEntry entry;
    entry.name = spec.to_string();
    Natural order = 0;
    try {
      order = spec.order();
    } catch (const OutOfRange&) {
      order = kNaturalMax;
    }
    if (order > cap) {
      entry.skipped = true;
      entry.order = order > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(order);
      entry.note = "order " + (order == kNaturalMax ? std::string(">2^127") : piset::to_string(order)) +
                   " above cap " + std::to_string(cap);
      report.entries.push_back(std::move(entry));
      continue;
    }
    record(std::move(entry), construct(spec, cap));
  }
  for (auto& [name, group] : solvable_battery()) {
    CorpusEntry entry;
    entry.name = name;
    record(std::move(entry), group);
  }
  return report;
}

}  // namespace piset
