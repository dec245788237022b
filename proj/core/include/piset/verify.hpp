#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piset/engine.hpp"

namespace piset {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultCap;
  std::uint64_t rng_seed = 20161017;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::size_t count(CheckStatus status) const;
};

/// Runs every reproduction check in a fixed order: golden spectra, the
/// Mersenne gcd identity, pairwise spectrum intersections, Suzuki gcd facts,
/// order-3 membership, the prime/composite bound, the exhaustive IES sweep
/// and the formula-vs-enumeration oracles. Enumeration checks whose group
/// order exceeds `cap` are reported as skipped. Deterministic for fixed
/// options.
VerifyReport run_reproduction_suite(const VerifyOptions& options = {});

/// All nonempty subsets of {lo, ..., hi} with at most `max_size` members,
/// in lexicographic order of their sorted member lists.
std::vector<std::vector<std::uint64_t>> small_subsets(std::uint64_t lo, std::uint64_t hi, std::size_t max_size);

}  // namespace piset
