#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "piset/engine.hpp"
#include "piset/ies.hpp"
#include "piset/spectrum.hpp"
#include "piset/verify.hpp"

namespace piset {

// Structured (JSON) documents emitted by the command-line tool. Keys appear
// in a fixed order and output is pretty-printed with two-space indentation,
// so identical inputs give identical bytes. Integers above 2^64 - 1 are
// written as decimal strings.

struct SpectrumQuery {
  std::string group;
  std::string method;  // "formula", "enumerate" or "both"
  std::optional<SpectrumSet> formula;
  std::optional<SpectrumSet> enumerated;
  std::optional<std::uint64_t> order;  // set when enumerated
  bool matches() const { return !formula || !enumerated || *formula == *enumerated; }
};

struct SolvableQuery {
  std::string group;
  SolvabilityReport report;
};

std::string to_json(const SpectrumQuery& query);
std::string to_json(const SolvableQuery& query);
/// { "set", "ies", "basis", "witness", "witness_spectrum", "scanned" }
std::string to_json(const IESVerdict& verdict);
std::string to_json(const EmpiricalReport& report);
std::string to_json(const VerifyReport& report);

}  // namespace piset
