#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "piset/engine.hpp"
#include "piset/numtheory.hpp"
#include "piset/spectrum.hpp"

namespace piset {

enum class Family {
  Alt,     // alternating group of degree n
  L2Even,  // PSL(2, 2^n), parameter n
  L2Odd,   // PSL(2, q), q an odd prime power, parameter q
  L3_3,    // PSL(3, 3), no parameter
  Sz,      // Suzuki group Sz(2^e), e odd >= 3, parameter e
};

/// A named group: family plus its parameter. Construct through the factory
/// functions or parse(); they enforce the per-family parameter ranges.
class GroupSpec {
 public:
  static GroupSpec alt(unsigned n);
  static GroupSpec l2_even(unsigned n);
  static GroupSpec l2_odd(std::uint64_t q);
  static GroupSpec l3_3();
  static GroupSpec sz(unsigned e);
  /// Either L2 family, dispatched on the parity of the prime power q.
  static GroupSpec l2(std::uint64_t q);

  /// Parses `A5`, `Alt:n`, `L2:q`, `Sz:q` (q = 2^e) or `L3_3`.
  static GroupSpec parse(const std::string& text);

  Family family() const noexcept { return family_; }
  std::uint64_t parameter() const noexcept { return parameter_; }

  /// Canonical text form in the parse() syntax, e.g. "L2:8", "Sz:32", "Alt:5".
  std::string to_string() const;

  /// |G| from the standard order formulas. Throws OutOfRange on overflow.
  Natural order() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Family family, std::uint64_t parameter) : family_(family), parameter_(parameter) {}
  Family family_;
  std::uint64_t parameter_;
};

/// Builds the concrete permutation or matrix group for `spec` and checks its
/// order by enumeration. Throws BudgetExceeded if the order exceeds `cap`,
/// ValidationFailed if the generators produce the wrong order.
Group construct(const GroupSpec& spec, std::uint64_t cap = kDefaultCap);

/// The raw generators construct() uses, without validation.
Group construct_unvalidated(const GroupSpec& spec);

/// Standard Suzuki generators over GF(2^e): unipotent S(1,0), S(0,1), torus
/// element and antidiagonal involution. Exposed for validation tests.
std::vector<SquareMatrix> suzuki_generators(unsigned e);

/// Closed-form spectrum. Throws InvalidInput for alternating groups other
/// than A5, which have no formula here.
SpectrumSet spectrum_formula(const GroupSpec& spec, std::uint64_t trial_budget = kDefaultTrialBudget);

/// Whether `k` is an element order of `spec`, by divisibility against the
/// formula's maximal orders without factoring anything.
bool spectrum_contains(const GroupSpec& spec, Natural k);

/// Thompson's list of minimal simple groups with parameters bounded by B,
/// ordered by family number then parameter.
std::vector<GroupSpec> minimal_simple_specs(std::uint64_t bound);

struct SpectrumStats {
  std::size_t pi_count = 0;   // primes in the spectrum
  std::size_t chi_count = 0;  // composite members
  bool bound_holds = false;   // pi_count <= chi_count + 3
  bool equality = false;      // pi_count == chi_count + 3
  friend bool operator==(const SpectrumStats&, const SpectrumStats&) = default;
};

SpectrumStats spectrum_stats(const SpectrumSet& spectrum);

}  // namespace piset
