// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "piset/catalog.hpp"
#include "piset/engine.hpp"
#include "piset/errors.hpp"
#include "piset/ies.hpp"
#include "piset/numtheory.hpp"
#include "piset/verify.hpp"

using namespace piset;

namespace {

// Runtime limits in seconds, one per criterion.
constexpr double kLimit[] = {1.0, 60.0, 1.0, 1.0, 5.0, 60.0, 60.0, 120.0};
constexpr std::uint64_t kSeed = 20161017;
constexpr int kRandomPairs = 200;
constexpr unsigned kExhaustiveMax = 40;
constexpr unsigned kRandomMax = 80;
constexpr std::uint64_t kPrimeBound = 13;
constexpr std::uint64_t kCorpusCap = std::uint64_t{1} << 20;

using Values = std::vector<Natural>;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string show(const Values& v) { return SpectrumSet::from_values(v).to_string(); }

Outcome golden_spectra() {
  Outcome out;
  const std::vector<std::pair<const char*, Values>> golden = {
      {"A5", {1, 2, 3, 5}},
      {"L2:8", {1, 2, 3, 7, 9}},
      {"L2:32", {1, 2, 3, 11, 31, 33}},
      {"L2:128", {1, 2, 3, 43, 127, 129}},
      {"Sz:8", {1, 2, 4, 5, 7, 13}},
      {"Sz:32", {1, 2, 4, 5, 25, 31, 41}},
      {"Sz:128", {1, 2, 4, 5, 29, 113, 127, 145}},
  };
  for (const auto& [name, expected] : golden) {
    const auto got = spectrum_formula(GroupSpec::parse(name)).values();
    out.require(got == expected, std::string(name) + " gave " + show(got));
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  const std::vector<std::pair<const char*, std::uint64_t>> groups = {
      {"A5", 60}, {"L2:4", 60}, {"L2:8", 504}, {"L2:7", 168}, {"L2:13", 1092}, {"L2:27", 9828}, {"Sz:8", 29120}};
  for (const auto& [name, order] : groups) {
    const auto spec = GroupSpec::parse(name);
    out.require(spec.order() == order, std::string(name) + " order formula");
    const Group g = construct(spec);  // validates the order by enumeration
    const auto enumerated = spectrum_enumerate(g);
    const auto formula = spectrum_formula(spec);
    out.require(enumerated == formula,
                std::string(name) + ": enumerated " + enumerated.to_string() + " vs " + formula.to_string());
  }
  const Group l33 = construct(GroupSpec::l3_3());
  out.require(enumerate(l33).size() == 5616, "L3_3 order");
  out.require(spectrum_enumerate(l33).values() == Values{1, 2, 3, 4, 6, 8, 13}, "L3_3 spectrum");
  return out;
}

Natural euclid(Natural a, Natural b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

Outcome mersenne_identity() {
  Outcome out;
  const auto check = [&](unsigned m, unsigned n) {
    const Natural lhs = mersenne_gcd(m, n);
    const Natural rhs = euclid(pow2(m) - 1, pow2(n) - 1);
    out.require(lhs == rhs, "m=" + std::to_string(m) + " n=" + std::to_string(n));
  };
  for (unsigned m = 1; m <= kExhaustiveMax; ++m)
    for (unsigned n = 1; n <= kExhaustiveMax; ++n) check(m, n);
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<unsigned> dist(1, kRandomMax);
  for (int i = 0; i < kRandomPairs; ++i) {
    const unsigned m = dist(rng);
    check(m, dist(rng));
  }
  return out;
}

Outcome pairwise_intersections() {
  Outcome out;
  const auto primes = primes_up_to(kPrimeBound);
  for (auto p : primes)
    for (auto q : primes) {
      if (p == q) continue;
      const std::string tag = std::to_string(p) + "," + std::to_string(q);
      const auto l2 = spectrum_formula(GroupSpec::l2_even(static_cast<unsigned>(p)))
                          .intersect(spectrum_formula(GroupSpec::l2_even(static_cast<unsigned>(q))));
      out.require(l2.values() == Values{1, 2, 3}, "L2 " + tag + " gave " + l2.to_string());
      if (p == 2 || q == 2) continue;
      const auto sz = spectrum_formula(GroupSpec::sz(static_cast<unsigned>(p)))
                          .intersect(spectrum_formula(GroupSpec::sz(static_cast<unsigned>(q))));
      out.require(sz.values() == Values{1, 2, 4, 5}, "Sz " + tag + " gave " + sz.to_string());
      out.require(suzuki_gcd_facts(p, q) == SuzukiGcdFacts{5, 1, 1}, "gcd facts " + tag);
    }
  return out;
}

Outcome ies_sweep() {
  Outcome out;
  const auto subsets = small_subsets(2, 12, 3);
  out.require(subsets.size() == 231, "subset count " + std::to_string(subsets.size()));
  std::size_t non_ies = 0;
  for (const auto& values : subsets) {
    const CandidateSet t(values);
    const bool superset = t.contains(2) || (t.contains(3) && (t.contains(4) || t.contains(5)));
    out.require(classify(t).is_ies == superset, "classify " + t.to_string());
    if (superset) continue;
    ++non_ies;
    const auto w = witness(t);
    out.require(w.witness.has_value() && w.witness_spectrum->disjoint_from(t.as_naturals()),
                "witness " + t.to_string());
    out.require(w.scanned.size() <= t.size() + 1, "scan length " + t.to_string());
  }
  if (out.ok) out.detail = std::to_string(subsets.size()) + " sets, " + std::to_string(non_ies) + " witnessed";
  return out;
}

Outcome solvability_battery() {
  Outcome out;
  for (const auto& [name, group] : solvable_battery())
    out.require(is_solvable(group).solvable, name + " should be solvable");
  for (const char* name : {"A5", "L2:8", "Sz:8"})
    out.require(!is_solvable(construct(GroupSpec::parse(name))).solvable, std::string(name) + " should not be");
  const Group s4 = Group::from_permutations(
      {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  const auto series = is_solvable(s4).series_orders;
  out.require(series == std::vector<std::uint64_t>{24, 12, 4, 1}, "S4 derived series");
  return out;
}

Outcome prime_bound() {
  Outcome out;
  for (const auto& spec : minimal_simple_specs(kPrimeBound)) {
    const auto stats = spectrum_stats(spectrum_formula(spec));
    out.require(stats.bound_holds, spec.to_string());
  }
  for (const auto& [name, group] : solvable_battery())
    out.require(spectrum_stats(spectrum_enumerate(group)).bound_holds, name);
  for (const char* name : {"A5", "Sz:8"}) {
    const Group g = construct(GroupSpec::parse(name));
    out.require(spectrum_stats(spectrum_enumerate(g)).equality, std::string(name) + " equality");
    out.require(is_simple(g), std::string(name) + " simplicity");
  }
  return out;
}

Outcome empirical() {
  Outcome out;
  for (const char* set : {"2", "3,4", "3,5"}) {
    const auto report = empirical_check(CandidateSet::parse(set), kPrimeBound, kCorpusCap);
    out.require(report.classified_ies && report.violations.empty(), std::string("T={") + set + "}");
  }
  const auto seven = empirical_check(CandidateSet::parse("7"), kPrimeBound, kCorpusCap);
  out.require(std::find(seven.violations.begin(), seven.violations.end(), "Alt:5") != seven.violations.end(),
              "T={7}: A5 violation missing");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden spectra", golden_spectra},
      {"formula/enumeration oracle", oracle_equivalence},
      {"Mersenne gcd identity", mersenne_identity},
      {"pairwise spectrum intersections", pairwise_intersections},
      {"IES sweep over small sets", ies_sweep},
      {"solvability battery", solvability_battery},
      {"prime/composite bound", prime_bound},
      {"empirical corpus check", empirical},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= kLimit[i]) {
      out.ok = false;
      out.detail = "over time limit " + std::to_string(kLimit[i]) + " s";
    }
    failures += !out.ok;
    std::printf("%s criterion %zu (%s) %.3f s%s%s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
