#include <gtest/gtest.h>

#include "piset/catalog.hpp"
#include "piset/errors.hpp"

using piset::Family;
using piset::GroupSpec;
using piset::Natural;
using piset::SpectrumSet;

namespace {

std::vector<Natural> nat(std::initializer_list<unsigned> v) { return {v.begin(), v.end()}; }
std::vector<Natural> formula(const char* name) { return piset::spectrum_formula(GroupSpec::parse(name)).values(); }

}  // namespace

TEST(GroupSpec, ParseAndPrint) {
  EXPECT_EQ(GroupSpec::parse("A5"), GroupSpec::alt(5));
  EXPECT_EQ(GroupSpec::parse("Alt:7"), GroupSpec::alt(7));
  EXPECT_EQ(GroupSpec::parse("L2:8"), GroupSpec::l2_even(3));
  EXPECT_EQ(GroupSpec::parse("L2:27"), GroupSpec::l2_odd(27));
  EXPECT_EQ(GroupSpec::parse("Sz:32"), GroupSpec::sz(5));
  EXPECT_EQ(GroupSpec::parse("L3_3"), GroupSpec::l3_3());
  for (const char* text : {"Alt:5", "L2:4", "L2:7", "L2:128", "Sz:8", "L3_3"})
    EXPECT_EQ(GroupSpec::parse(text).to_string(), text);
  EXPECT_EQ(GroupSpec::l2_even(100).to_string(), "L2:1267650600228229401496703205376");
}

TEST(GroupSpec, RejectsInvalidParameters) {
  for (const char* text : {"Sz:16", "Sz:2", "Sz:12", "L2:6", "L2:3", "L2:2", "L2:1", "L2:15", "Alt:2", "Foo:3", "B5",
                           "L2:", "Sz:x"})
    EXPECT_THROW(GroupSpec::parse(text), piset::InvalidInput) << text;
}

TEST(GroupSpec, Orders) {
  EXPECT_EQ(GroupSpec::alt(5).order(), Natural{60});
  EXPECT_EQ(GroupSpec::l2_even(3).order(), Natural{504});
  EXPECT_EQ(GroupSpec::l2_odd(27).order(), Natural{9828});
  EXPECT_EQ(GroupSpec::sz(3).order(), Natural{29120});
  EXPECT_EQ(GroupSpec::sz(5).order(), Natural{32537600});
  EXPECT_EQ(GroupSpec::l3_3().order(), Natural{5616});
}

TEST(Construct, Examples) {
  const piset::Group a5 = piset::construct(GroupSpec::alt(5));
  EXPECT_EQ(a5.kind(), piset::Group::Kind::Permutation);
  EXPECT_EQ(piset::enumerate(a5).size(), 60u);

  const piset::Group l2_8 = piset::construct(GroupSpec::l2_even(3));
  EXPECT_EQ(l2_8.width(), 9u);
  EXPECT_EQ(piset::enumerate(l2_8).size(), 504u);

  const piset::Group sz8 = piset::construct(GroupSpec::sz(3));
  EXPECT_EQ(sz8.kind(), piset::Group::Kind::Matrix);
  EXPECT_EQ(sz8.width(), 16u);
  EXPECT_EQ(piset::enumerate(sz8).size(), 29120u);
}

TEST(Construct, AlternatingGroupsOfSmallDegree) {
  for (unsigned n = 3; n <= 8; ++n) {
    const GroupSpec spec = GroupSpec::alt(n);
    EXPECT_EQ(Natural{piset::enumerate(piset::construct(spec)).size()}, spec.order()) << n;
  }
}

TEST(Construct, BudgetExceededAboveCap) {
  EXPECT_THROW(piset::construct(GroupSpec::sz(5)), piset::BudgetExceeded);
  EXPECT_THROW(piset::construct(GroupSpec::l2_even(3), 100), piset::BudgetExceeded);
}

TEST(Construct, CorruptedSuzukiGeneratorFailsValidation) {
  auto gens = piset::suzuki_generators(3);
  auto entries = gens[0].entries();
  entries[8] = 3;  // perturb b in S(1, 0); still unipotent lower triangular
  gens[0] = piset::SquareMatrix(gens[0].field(), 4, entries);
  const piset::Group broken = piset::Group::from_matrices(gens);
  EXPECT_THROW(piset::validate_order(broken, 29120, "Sz:8"), piset::ValidationFailed);
}

TEST(SpectrumFormula, GoldenLists) {
  EXPECT_EQ(formula("A5"), nat({1, 2, 3, 5}));
  EXPECT_EQ(formula("L2:8"), nat({1, 2, 3, 7, 9}));
  EXPECT_EQ(formula("L2:32"), nat({1, 2, 3, 11, 31, 33}));
  EXPECT_EQ(formula("L2:128"), nat({1, 2, 3, 43, 127, 129}));
  EXPECT_EQ(formula("Sz:8"), nat({1, 2, 4, 5, 7, 13}));
  EXPECT_EQ(formula("Sz:32"), nat({1, 2, 4, 5, 25, 31, 41}));
  EXPECT_EQ(formula("Sz:128"), nat({1, 2, 4, 5, 29, 113, 127, 145}));
}

TEST(SpectrumFormula, DerivedValues) {
  EXPECT_EQ(formula("L2:7"), nat({1, 2, 3, 4, 7}));
  EXPECT_EQ(formula("L3_3"), nat({1, 2, 3, 4, 6, 8, 13}));
  EXPECT_EQ(formula("L2:4"), formula("A5"));
  EXPECT_THROW(piset::spectrum_formula(GroupSpec::alt(7)), piset::InvalidInput);
}

TEST(SpectrumFormula, LargeParametersStayExact) {
  const SpectrumSet s = piset::spectrum_formula(GroupSpec::sz(61));
  EXPECT_TRUE(s.contains((Natural{1} << 61) - 1));
  EXPECT_FALSE(s.contains(3));
  const SpectrumSet l = piset::spectrum_formula(GroupSpec::l2_even(64));
  EXPECT_TRUE(l.contains(274177));
}

// Formula against brute-force enumeration of the constructed group.
class FormulaOracle : public ::testing::TestWithParam<const char*> {};

TEST_P(FormulaOracle, EnumerationMatches) {
  const GroupSpec spec = GroupSpec::parse(GetParam());
  const piset::Group g = piset::construct(spec);
  EXPECT_EQ(piset::spectrum_enumerate(g), piset::spectrum_formula(spec));
}

INSTANTIATE_TEST_SUITE_P(Catalog, FormulaOracle,
                         ::testing::Values("A5", "L2:4", "L2:8", "L2:32", "L2:5", "L2:7", "L2:9", "L2:11", "L2:13",
                                           "L2:27", "L2:16", "Sz:8", "L3_3"),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (char& c : n)
                             if (c == ':') c = '_';
                           return n;
                         });

TEST(SpectrumContains, AgreesWithFormula) {
  for (const char* name : {"A5", "L2:8", "L2:32", "L2:27", "L2:13", "Sz:8", "Sz:32", "Sz:128", "L3_3", "L2:1024"}) {
    const GroupSpec spec = GroupSpec::parse(name);
    const SpectrumSet s = piset::spectrum_formula(spec);
    for (Natural k = 0; k <= 300; ++k) EXPECT_EQ(piset::spectrum_contains(spec, k), s.contains(k)) << name << " " << (unsigned)k;
  }
}

TEST(MinimalSimpleSpecs, BoundThree) {
  const std::vector<GroupSpec> expected = {GroupSpec::l2_even(2), GroupSpec::l2_even(3), GroupSpec::l2_odd(27),
                                           GroupSpec::l3_3(), GroupSpec::sz(3)};
  EXPECT_EQ(piset::minimal_simple_specs(3), expected);
  EXPECT_THROW(piset::minimal_simple_specs(1), piset::InvalidInput);
}

TEST(MinimalSimpleSpecs, FamilyOneFilter) {
  const auto specs = piset::minimal_simple_specs(13);
  auto has = [&](const GroupSpec& s) { return std::find(specs.begin(), specs.end(), s) != specs.end(); };
  EXPECT_FALSE(has(GroupSpec::l2_odd(11)));  // 5 | 120
  EXPECT_TRUE(has(GroupSpec::l2_odd(13)));   // 5 does not divide 168
  EXPECT_TRUE(has(GroupSpec::l2_odd(5)));
  EXPECT_TRUE(has(GroupSpec::l2_odd(7)));
  EXPECT_TRUE(has(GroupSpec::l2_odd(243)));
  EXPECT_EQ(specs.size(), 3u + 6u + 5u + 1u + 5u);
}

TEST(MinimalSimpleSpecs, OrderThreeOutsideSuzuki) {
  for (const GroupSpec& s : piset::minimal_simple_specs(13)) {
    const SpectrumSet spectrum = piset::spectrum_formula(s);
    if (s.family() == Family::Sz) {
      EXPECT_FALSE(spectrum.contains(3)) << s.to_string();
      EXPECT_TRUE(spectrum.contains(4) && spectrum.contains(5)) << s.to_string();
    } else {
      EXPECT_TRUE(spectrum.contains(3)) << s.to_string();
    }
  }
}

TEST(Intersections, EvenL2SpectraMeetInOneTwoThree) {
  const auto primes = piset::primes_up_to(13);
  for (auto p : primes)
    for (auto q : primes) {
      if (p == q) continue;
      const auto meet = piset::spectrum_formula(GroupSpec::l2_even(p)).intersect(piset::spectrum_formula(GroupSpec::l2_even(q)));
      EXPECT_EQ(meet.values(), nat({1, 2, 3})) << p << "," << q;
    }
}

TEST(Intersections, SuzukiSpectraMeetInOneTwoFourFive) {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u})
    for (unsigned q : {3u, 5u, 7u, 11u, 13u}) {
      if (p == q) continue;
      const auto meet = piset::spectrum_formula(GroupSpec::sz(p)).intersect(piset::spectrum_formula(GroupSpec::sz(q)));
      EXPECT_EQ(meet.values(), nat({1, 2, 4, 5})) << p << "," << q;
    }
}

TEST(SpectrumStats, Examples) {
  EXPECT_EQ(piset::spectrum_stats(SpectrumSet::from_values(nat({1, 2, 3, 5}))), (piset::SpectrumStats{3, 0, true, true}));
  EXPECT_EQ(piset::spectrum_stats(SpectrumSet::from_values(nat({1, 2, 4, 5, 7, 13}))),
            (piset::SpectrumStats{4, 1, true, true}));
  EXPECT_EQ(piset::spectrum_stats(SpectrumSet::from_values(nat({1, 2, 3, 7, 9}))),
            (piset::SpectrumStats{3, 1, true, false}));
  EXPECT_EQ(piset::spectrum_stats(SpectrumSet{}), (piset::SpectrumStats{0, 0, true, false}));
}

TEST(SpectrumStats, BoundHoldsOverMinimalSimpleGroups) {
  for (const GroupSpec& s : piset::minimal_simple_specs(13)) {
    const auto spectrum = piset::spectrum_formula(s);
    const auto st = piset::spectrum_stats(spectrum);
    EXPECT_TRUE(st.bound_holds) << s.to_string();
    EXPECT_EQ(st.pi_count + st.chi_count + 1, spectrum.size());
  }
}

TEST(SpectrumStats, EqualityCasesAreSimple) {
  for (const char* name : {"A5", "Sz:8"}) {
    const GroupSpec spec = GroupSpec::parse(name);
    ASSERT_TRUE(piset::spectrum_stats(piset::spectrum_formula(spec)).equality) << name;
    EXPECT_TRUE(piset::is_simple(piset::construct(spec))) << name;
  }
}

TEST(SpectrumSet, RejectsInvalidSets) {
  EXPECT_THROW(SpectrumSet::from_values(nat({2, 3})), piset::InvalidInput);
  EXPECT_THROW(SpectrumSet::from_values(nat({1, 2, 6})), piset::InvalidInput);
  EXPECT_EQ(SpectrumSet::closure_of(nat({6, 4})).values(), nat({1, 2, 3, 4, 6}));
  EXPECT_EQ(SpectrumSet::from_values(nat({3, 1, 3})).to_string(), "{1, 3}");
}
