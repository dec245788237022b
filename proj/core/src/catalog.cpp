#include "piset/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "piset/errors.hpp"

namespace piset {

namespace {

constexpr std::uint64_t kMaxOddL2 = std::uint64_t{1} << 62;

// Returns (p, f) with q = p^f, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint64_t>(factors.front().prime), factors.front().exponent);
}

// Exponent e with q = 2^e, or nullopt.
std::optional<unsigned> log2_exact(Natural q) {
  if (q == 0 || (q & (q - 1)) != 0) return std::nullopt;
  unsigned e = 0;
  while ((Natural{1} << e) != q) ++e;
  return e;
}

std::uint64_t parse_u64(const std::string& text, const std::string& context) {
  const Natural v = parse_natural(text);
  if (v > UINT64_MAX) throw InvalidInput(context + ": parameter too large");
  return static_cast<std::uint64_t>(v);
}

const std::vector<Natural> kL3_3Spectrum = {1, 2, 3, 4, 6, 8, 13};
const std::vector<Natural> kA5Spectrum = {1, 2, 3, 5};

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::alt(unsigned n) {
  if (n < 3 || n > 30) throw InvalidInput("Alt:n needs 3 <= n <= 30, got " + std::to_string(n));
  return {Family::Alt, n};
}

GroupSpec GroupSpec::l2_even(unsigned n) {
  if (n < 2 || n > 126) throw InvalidInput("L2(2^n) needs 2 <= n <= 126, got n = " + std::to_string(n));
  return {Family::L2Even, n};
}

GroupSpec GroupSpec::l2_odd(std::uint64_t q) {
  if (q < 5 || q % 2 == 0 || q > kMaxOddL2)
    throw InvalidInput("L2(q) with odd q needs an odd prime power 5 <= q <= 2^62, got " + std::to_string(q));
  if (!prime_power(q)) throw InvalidInput("L2(q): " + std::to_string(q) + " is not a prime power");
  return {Family::L2Odd, q};
}

GroupSpec GroupSpec::l3_3() { return {Family::L3_3, 0}; }

GroupSpec GroupSpec::sz(unsigned e) {
  if (e < 3 || e % 2 == 0 || e > 125)
    throw InvalidInput("Sz(2^e) needs odd 3 <= e <= 125, got e = " + std::to_string(e));
  return {Family::Sz, e};
}

GroupSpec GroupSpec::l2(std::uint64_t q) {
  if (q % 2 == 0) {
    const auto e = log2_exact(q);
    if (!e) throw InvalidInput("L2:" + std::to_string(q) + " is not a prime power");
    return l2_even(*e);
  }
  return l2_odd(q);
}

GroupSpec GroupSpec::parse(const std::string& text) {
  if (text == "A5") return alt(5);
  if (text == "L3_3" || text == "L3:3") return l3_3();
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InvalidInput("unknown group '" + text + "' (expected A5, Alt:n, L2:q, Sz:q or L3_3)");
  const std::string family = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (family == "Alt") {
    const std::uint64_t n = parse_u64(arg, text);
    if (n > 30) throw InvalidInput("Alt:n needs 3 <= n <= 30");
    return alt(static_cast<unsigned>(n));
  }
  if (family == "L2") {
    const Natural q = parse_natural(arg);
    if (q % 2 == 0) {
      const auto e = log2_exact(q);
      if (!e) throw InvalidInput(text + ": " + arg + " is not a prime power");
      return l2_even(*e);
    }
    return l2_odd(parse_u64(arg, text));
  }
  if (family == "Sz") {
    const auto e = log2_exact(parse_natural(arg));
    if (!e) throw InvalidInput(text + ": Suzuki groups need q = 2^e");
    return sz(*e);
  }
  throw InvalidInput("unknown group family '" + family + "' in '" + text + "'");
}

std::string GroupSpec::to_string() const {
  switch (family_) {
    case Family::Alt:
      return "Alt:" + std::to_string(parameter_);
    case Family::L2Even:
      return "L2:" + piset::to_string(pow2(static_cast<unsigned>(parameter_)));
    case Family::L2Odd:
      return "L2:" + std::to_string(parameter_);
    case Family::L3_3:
      return "L3_3";
    case Family::Sz:
      return "Sz:" + piset::to_string(pow2(static_cast<unsigned>(parameter_)));
  }
  return "?";
}

Natural GroupSpec::order() const {
  switch (family_) {
    case Family::Alt: {
      Natural f = 1;
      for (std::uint64_t i = 3; i <= parameter_; ++i) f = checked_mul(f, i);
      return f;
    }
    case Family::L2Even: {
      const Natural q = pow2(static_cast<unsigned>(parameter_));
      return checked_mul(q, checked_sub(checked_mul(q, q), 1));
    }
    case Family::L2Odd: {
      const Natural q = parameter_;
      return checked_mul(q, checked_mul(q, q) - 1) / 2;
    }
    case Family::L3_3:
      return 5616;
    case Family::Sz: {
      const Natural q = pow2(static_cast<unsigned>(parameter_));
      const Natural q2 = checked_mul(q, q);
      return checked_mul(checked_mul(q2, checked_add(q2, 1)), q - 1);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

Group alternating(unsigned n) {
  std::vector<Word> three(n), cycle(n);
  for (unsigned i = 0; i < n; ++i) three[i] = cycle[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  } else {
    // (1 2 ... n-1)
    for (unsigned i = 1; i < n; ++i) cycle[i] = i + 1 == n ? 1 : i + 1;
  }
  return Group::from_permutations({Permutation(three), Permutation(cycle)});
}

// PSL(2, q) acting on the projective line: points 0..q-1 are field encodings,
// point q is infinity.
Group projective_line(std::uint32_t p, unsigned f) {
  const Field field = Field::make(p, f);
  const std::uint32_t q = field.size();
  const Word inf = q;
  const bool even = p == 2;
  const Field::Encoding scale = even ? field.primitive() : field.mul(field.primitive(), field.primitive());
  const Field::Encoding minus_one = field.neg(field.one());

  std::vector<Word> translate(q + 1), dilate(q + 1), flip(q + 1);
  for (Word x = 0; x < q; ++x) {
    translate[x] = field.add(x, field.one());
    dilate[x] = field.mul(scale, x);
    // x -> 1/x (even q) or x -> -1/x (odd q)
    flip[x] = x == 0 ? inf : field.mul(even ? field.one() : minus_one, field.inv(x));
  }
  translate[inf] = inf;
  dilate[inf] = inf;
  flip[inf] = 0;
  return Group::from_permutations({Permutation(translate), Permutation(dilate), Permutation(flip)});
}

Group l3_3_group() {
  const Field f = Field::make(3, 1);
  std::vector<SquareMatrix> gens;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Field::Encoding> e(9, 0);
      e[0] = e[4] = e[8] = 1;
      e[i * 3 + j] = 1;
      gens.emplace_back(f, 3, std::move(e));
    }
  return Group::from_matrices(gens);
}

}  // namespace

std::vector<SquareMatrix> suzuki_generators(unsigned e) {
  if (e < 3 || e % 2 == 0) throw InvalidInput("Suzuki exponent must be odd and >= 3");
  const unsigned m = (e - 1) / 2;
  const Field f = Field::make(2, e);
  // theta: x -> x^(2^(m+1)); theta^2 is the Frobenius x -> x^2.
  const Natural theta_exp = pow2(m + 1);
  auto theta = [&](Field::Encoding x) { return f.pow(x, theta_exp); };

  auto unipotent = [&](Field::Encoding a, Field::Encoding b) {
    const Field::Encoding at = theta(a);
    const Field::Encoding corner = f.add(f.add(f.mul(f.mul(a, a), at), f.mul(a, b)), theta(b));
    const Field::Encoding mid = f.add(f.mul(a, at), b);
    return SquareMatrix(f, 4,
                        {1, 0, 0, 0,  //
                         a, 1, 0, 0,  //
                         b, at, 1, 0,  //
                         corner, mid, a, 1});
  };

  const Field::Encoding lambda = f.primitive();
  const Natural group_order = f.size() - 1;
  const Natural s = pow2(m);  // 2^m
  auto lpow = [&](Natural k, bool negative) {
    const Field::Encoding v = f.pow(lambda, k % group_order);
    return negative ? f.inv(v) : v;
  };
  const SquareMatrix torus(f, 4,
                           {lpow(1 + s, false), 0, 0, 0,  //
                            0, lpow(s, false), 0, 0,      //
                            0, 0, lpow(s, true), 0,       //
                            0, 0, 0, lpow(1 + s, true)});
  const SquareMatrix involution(f, 4,
                                {0, 0, 0, 1,  //
                                 0, 0, 1, 0,  //
                                 0, 1, 0, 0,  //
                                 1, 0, 0, 0});
  return {unipotent(1, 0), unipotent(0, 1), torus, involution};
}

Group construct_unvalidated(const GroupSpec& spec) {
  switch (spec.family()) {
    case Family::Alt:
      return alternating(static_cast<unsigned>(spec.parameter()));
    case Family::L2Even: {
      if (spec.parameter() > 20) throw BudgetExceeded(spec.to_string() + " is beyond the field size budget");
      return projective_line(2, static_cast<unsigned>(spec.parameter()));
    }
    case Family::L2Odd: {
      const auto pf = prime_power(spec.parameter());
      if (spec.parameter() > Field::kMaxSize)
        throw BudgetExceeded(spec.to_string() + " is beyond the field size budget");
      return projective_line(static_cast<std::uint32_t>(pf->first), pf->second);
    }
    case Family::L3_3:
      return l3_3_group();
    case Family::Sz:
      if (spec.parameter() > 20) throw BudgetExceeded(spec.to_string() + " is beyond the field size budget");
      return Group::from_matrices(suzuki_generators(static_cast<unsigned>(spec.parameter())));
  }
  throw InvalidInput("unknown family");
}

Group construct(const GroupSpec& spec, std::uint64_t cap) {
  Natural expected = 0;
  try {
    expected = spec.order();
  } catch (const OutOfRange&) {
    throw BudgetExceeded(spec.to_string() + " is far beyond the enumeration cap");
  }
  if (expected > cap)
    throw BudgetExceeded(spec.to_string() + " has order " + piset::to_string(expected) +
                         ", above the enumeration cap " + std::to_string(cap));
  Group group = construct_unvalidated(spec);
  validate_order(group, static_cast<std::uint64_t>(expected), spec.to_string(), cap);
  return group;
}

// ---------------------------------------------------------------------------
// Formulas

SpectrumSet spectrum_formula(const GroupSpec& spec, std::uint64_t trial_budget) {
  std::vector<Natural> values{1};
  auto add_divisors = [&](Natural n) {
    for (Natural d : divisors(n, trial_budget)) values.push_back(d);
  };
  switch (spec.family()) {
    case Family::Alt:
      if (spec.parameter() != 5)
        throw InvalidInput("no closed-form spectrum for " + spec.to_string() + "; use enumeration");
      values = kA5Spectrum;
      break;
    case Family::L2Even: {
      const Natural q = pow2(static_cast<unsigned>(spec.parameter()));
      values.push_back(2);
      add_divisors(q - 1);
      add_divisors(q + 1);
      break;
    }
    case Family::L2Odd: {
      const std::uint64_t q = spec.parameter();
      values.push_back(prime_power(q)->first);
      add_divisors((q - 1) / 2);
      add_divisors((q + 1) / 2);
      break;
    }
    case Family::L3_3:
      values = kL3_3Spectrum;
      break;
    case Family::Sz: {
      const unsigned e = static_cast<unsigned>(spec.parameter());
      const Natural q = pow2(e);
      const Natural r = pow2((e - 1) / 2 + 1);
      values.push_back(2);
      values.push_back(4);
      add_divisors(q - 1);
      add_divisors(q - r + 1);
      add_divisors(q + r + 1);
      break;
    }
  }
  return SpectrumSet::from_values(std::move(values));
}

bool spectrum_contains(const GroupSpec& spec, Natural k) {
  if (k == 0) return false;
  if (k == 1) return true;
  auto divides = [k](Natural n) { return n % k == 0; };
  switch (spec.family()) {
    case Family::Alt:
      if (spec.parameter() != 5)
        throw InvalidInput("no closed-form spectrum for " + spec.to_string() + "; use enumeration");
      return std::find(kA5Spectrum.begin(), kA5Spectrum.end(), k) != kA5Spectrum.end();
    case Family::L2Even: {
      const Natural q = pow2(static_cast<unsigned>(spec.parameter()));
      return k == 2 || divides(q - 1) || divides(q + 1);
    }
    case Family::L2Odd: {
      const std::uint64_t q = spec.parameter();
      return k == prime_power(q)->first || divides((q - 1) / 2) || divides((q + 1) / 2);
    }
    case Family::L3_3:
      return std::find(kL3_3Spectrum.begin(), kL3_3Spectrum.end(), k) != kL3_3Spectrum.end();
    case Family::Sz: {
      const unsigned e = static_cast<unsigned>(spec.parameter());
      const Natural q = pow2(e);
      const Natural r = pow2((e - 1) / 2 + 1);
      return k == 2 || k == 4 || divides(q - 1) || divides(q - r + 1) || divides(q + r + 1);
    }
  }
  return false;
}

std::vector<GroupSpec> minimal_simple_specs(std::uint64_t bound) {
  if (bound < 2) throw InvalidInput("minimal_simple_specs needs a bound of at least 2");
  const auto primes = primes_up_to(bound);
  std::vector<GroupSpec> specs;
  for (std::uint64_t p : primes)
    if (p > 3 && (p * p - 1) % 5 != 0) specs.push_back(GroupSpec::l2_odd(p));
  for (std::uint64_t p : primes) specs.push_back(GroupSpec::l2_even(static_cast<unsigned>(p)));
  for (std::uint64_t p : primes) {
    if (p == 2) continue;
    if (p > 39) throw OutOfRange("L2(3^p) is only supported for p <= 39");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < p; ++i) q *= 3;
    specs.push_back(GroupSpec::l2_odd(q));
  }
  specs.push_back(GroupSpec::l3_3());
  for (std::uint64_t p : primes)
    if (p != 2) specs.push_back(GroupSpec::sz(static_cast<unsigned>(p)));
  return specs;
}

SpectrumStats spectrum_stats(const SpectrumSet& spectrum) {
  SpectrumStats stats;
  for (Natural v : spectrum.values()) {
    if (v == 1) continue;
    if (is_prime(v))
      ++stats.pi_count;
    else
      ++stats.chi_count;
  }
  stats.bound_holds = stats.pi_count <= stats.chi_count + 3;
  stats.equality = stats.pi_count == stats.chi_count + 3;
  return stats;
}

}  // namespace piset
