#include "piset/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "piset/catalog.hpp"
#include "piset/errors.hpp"
#include "piset/ies.hpp"

namespace piset {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "skip";
  }
  return "?";
}

bool VerifyReport::all_passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerifyReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [status](const CheckResult& c) { return c.status == status; }));
}

std::vector<std::vector<std::uint64_t>> small_subsets(std::uint64_t lo, std::uint64_t hi, std::size_t max_size) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t next) {
    for (std::uint64_t v = next; v <= hi; ++v) {
      current.push_back(v);
      out.push_back(current);
      if (current.size() < max_size) extend(v + 1);
      current.pop_back();
    }
  };
  if (max_size > 0 && lo <= hi) extend(lo);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

SpectrumSet literal(std::initializer_list<unsigned> values) {
  return SpectrumSet::from_values(std::vector<Natural>(values.begin(), values.end()));
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    CheckResult result{name, CheckStatus::Pass, ""};
    try {
      fn(result);
    } catch (const std::exception& e) {
      result.status = CheckStatus::Fail;
      result.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(result));
  }

  static void fail(CheckResult& r, const std::string& why) {
    r.status = CheckStatus::Fail;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += why;
  }

  const VerifyOptions& options() const { return options_; }
  VerifyReport take() { return std::move(report_); }

 private:
  VerifyOptions options_;
  VerifyReport report_;
};

void golden_spectra(Suite& suite) {
  const std::vector<std::pair<std::string, SpectrumSet>> golden = {
      {"A5", literal({1, 2, 3, 5})},
      {"L2:8", literal({1, 2, 3, 7, 9})},
      {"L2:32", literal({1, 2, 3, 11, 31, 33})},
      {"L2:128", literal({1, 2, 3, 43, 127, 129})},
      {"Sz:8", literal({1, 2, 4, 5, 7, 13})},
      {"Sz:32", literal({1, 2, 4, 5, 25, 31, 41})},
      {"Sz:128", literal({1, 2, 4, 5, 29, 113, 127, 145})},
  };
  for (const auto& [name, expected] : golden) {
    suite.run("golden spectrum " + name, [&](CheckResult& r) {
      const SpectrumSet got = spectrum_formula(GroupSpec::parse(name));
      r.detail = got.to_string();
      if (!(got == expected)) Suite::fail(r, "expected " + expected.to_string());
    });
  }
}

void mersenne_identity(Suite& suite) {
  suite.run("mersenne gcd identity, 1 <= m, n <= 40", [](CheckResult& r) {
    std::size_t pairs = 0;
    for (unsigned m = 1; m <= 40; ++m)
      for (unsigned n = 1; n <= 40; ++n, ++pairs)
        if (mersenne_gcd(m, n) != gcd(pow2(m) - 1, pow2(n) - 1))
          Suite::fail(r, "mismatch at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    if (r.status == CheckStatus::Pass) r.detail = std::to_string(pairs) + " pairs";
  });
  suite.run("mersenne gcd identity, 200 random pairs <= 80", [&suite](CheckResult& r) {
    std::mt19937_64 rng(suite.options().rng_seed);
    std::uniform_int_distribution<unsigned> dist(1, 80);
    for (int i = 0; i < 200; ++i) {
      const unsigned m = dist(rng), n = dist(rng);
      if (mersenne_gcd(m, n) != gcd(pow2(m) - 1, pow2(n) - 1))
        Suite::fail(r, "mismatch at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    }
    if (r.status == CheckStatus::Pass) r.detail = "seed " + std::to_string(suite.options().rng_seed);
  });
  suite.run("5 divides 2^(4m+2)+1 for m = 1..30", [](CheckResult& r) {
    for (unsigned m = 1; m <= 30; ++m)
      if ((pow2(4 * m + 2) + 1) % 5 != 0) Suite::fail(r, "fails at m = " + std::to_string(m));
  });
}

void intersections(Suite& suite) {
  const auto primes = primes_up_to(13);
  suite.run("L2(2^p) spectra pairwise meet in {1, 2, 3}, p, q <= 13", [&](CheckResult& r) {
    const SpectrumSet expected = literal({1, 2, 3});
    std::size_t pairs = 0;
    for (std::uint64_t p : primes)
      for (std::uint64_t q : primes) {
        if (p >= q) continue;
        ++pairs;
        const SpectrumSet meet = spectrum_formula(GroupSpec::l2_even(static_cast<unsigned>(p)))
                                     .intersect(spectrum_formula(GroupSpec::l2_even(static_cast<unsigned>(q))));
        if (!(meet == expected))
          Suite::fail(r, "p=" + std::to_string(p) + ", q=" + std::to_string(q) + " meet " + meet.to_string());
      }
    if (r.status == CheckStatus::Pass) r.detail = std::to_string(pairs) + " pairs";
  });
  suite.run("Sz(2^p) spectra pairwise meet in {1, 2, 4, 5}, odd p, q <= 13", [&](CheckResult& r) {
    const SpectrumSet expected = literal({1, 2, 4, 5});
    std::size_t pairs = 0;
    for (std::uint64_t p : primes)
      for (std::uint64_t q : primes) {
        if (p == 2 || p >= q) continue;
        ++pairs;
        const SpectrumSet meet = spectrum_formula(GroupSpec::sz(static_cast<unsigned>(p)))
                                     .intersect(spectrum_formula(GroupSpec::sz(static_cast<unsigned>(q))));
        if (!(meet == expected))
          Suite::fail(r, "p=" + std::to_string(p) + ", q=" + std::to_string(q) + " meet " + meet.to_string());
      }
    if (r.status == CheckStatus::Pass) r.detail = std::to_string(pairs) + " pairs";
  });
  suite.run("Suzuki gcd facts (5, 1, 1), odd p != q <= 13", [&](CheckResult& r) {
    for (std::uint64_t p : primes)
      for (std::uint64_t q : primes) {
        if (p == 2 || q == 2 || p == q) continue;
        const SuzukiGcdFacts facts = suzuki_gcd_facts(static_cast<unsigned>(p), static_cast<unsigned>(q));
        if (!(facts == SuzukiGcdFacts{5, 1, 1}))
          Suite::fail(r, "p=" + std::to_string(p) + ", q=" + std::to_string(q) + " gives (" +
                             to_string(facts.plus_plus) + ", " + to_string(facts.plus_minus) + ", " +
                             to_string(facts.minus_plus) + ")");
      }
  });
}

void catalog_properties(Suite& suite) {
  const auto specs = minimal_simple_specs(13);
  suite.run("order 3 occurs in families (1)-(4), bound 13", [&](CheckResult& r) {
    std::size_t n = 0;
    for (const GroupSpec& s : specs) {
      if (s.family() == Family::Sz) continue;
      ++n;
      if (!spectrum_formula(s).contains(3)) Suite::fail(r, s.to_string() + " lacks 3");
    }
    if (r.status == CheckStatus::Pass) r.detail = std::to_string(n) + " groups";
  });
  suite.run("Sz(2^e), e <= 13: 3 absent, 4 and 5 present", [&](CheckResult& r) {
    for (unsigned e = 3; e <= 13; e += 2) {
      const SpectrumSet s = spectrum_formula(GroupSpec::sz(e));
      if (s.contains(3) || !s.contains(4) || !s.contains(5))
        Suite::fail(r, GroupSpec::sz(e).to_string() + " has " + s.to_string());
    }
  });
  suite.run("prime count <= composite count + 3 over minimal simple groups, bound 13", [&](CheckResult& r) {
    std::vector<std::string> equal;
    for (const GroupSpec& s : specs) {
      const SpectrumStats st = spectrum_stats(spectrum_formula(s));
      if (!st.bound_holds) Suite::fail(r, s.to_string() + " violates the bound");
      if (st.equality) equal.push_back(s.to_string());
    }
    if (r.status == CheckStatus::Pass) {
      r.detail = "equality for";
      for (const auto& n : equal) r.detail += " " + n;
    }
  });
  suite.run("prime count <= composite count + 3 over the solvable battery", [&](CheckResult& r) {
    for (const auto& [name, group] : solvable_battery()) {
      const SpectrumStats st = spectrum_stats(spectrum_enumerate(group, suite.options().cap));
      if (!st.bound_holds) Suite::fail(r, name + " violates the bound");
    }
  });
}

void ies_sweep(Suite& suite) {
  suite.run("IES classification and witnesses, T in {2..12}, |T| <= 3", [](CheckResult& r) {
    const auto subsets = small_subsets(2, 12, 3);
    std::size_t ies = 0, witnessed = 0;
    for (const auto& values : subsets) {
      const CandidateSet t(values);
      const bool expected = t.contains(2) || t.includes({3, 4}) || t.includes({3, 5});
      const IESVerdict v = classify(t);
      if (v.is_ies != expected) Suite::fail(r, "misclassified " + t.to_string());
      if (v.is_ies) {
        ++ies;
        continue;
      }
      const IESVerdict w = witness(t);
      if (!w.checked_disjoint || !w.witness_spectrum->disjoint_from(t.as_naturals()) ||
          w.scanned.size() > t.size() + 1)
        Suite::fail(r, "bad witness for " + t.to_string());
      else
        ++witnessed;
    }
    if (r.status == CheckStatus::Pass)
      r.detail = std::to_string(subsets.size()) + " sets, " + std::to_string(ies) + " IES, " +
                 std::to_string(witnessed) + " witnessed";
  });
}

void oracles(Suite& suite) {
  const std::uint64_t cap = suite.options().cap;
  for (const char* name : {"A5", "L2:4", "L2:8", "L2:7", "L2:27", "Sz:8", "L3_3"}) {
    suite.run(std::string("formula = enumeration for ") + name, [&](CheckResult& r) {
      const GroupSpec spec = GroupSpec::parse(name);
      const Natural order = spec.order();
      if (order > cap) {
        r.status = CheckStatus::Skip;
        r.detail = "order " + to_string(order) + " above cap " + std::to_string(cap);
        return;
      }
      const Group group = construct(spec, cap);
      const SpectrumSet enumerated = spectrum_enumerate(group, cap);
      const SpectrumSet formula = spectrum_formula(spec);
      r.detail = "order " + to_string(order) + ", " + enumerated.to_string();
      if (!(enumerated == formula)) Suite::fail(r, "formula gives " + formula.to_string());
    });
  }
}

}  // namespace

VerifyReport run_reproduction_suite(const VerifyOptions& options) {
  Suite suite(options);
  golden_spectra(suite);
  mersenne_identity(suite);
  intersections(suite);
  catalog_properties(suite);
  ies_sweep(suite);
  oracles(suite);
  return suite.take();
}

}  // namespace piset
