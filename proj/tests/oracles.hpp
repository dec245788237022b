#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the library code they are compared against.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "piset/engine.hpp"

namespace oracle {

using U128 = piset::Natural;

/// Binary (Stein) gcd on full-width integers.
inline U128 binary_gcd(U128 a, U128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  unsigned shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  while (b != 0) {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  }
  return a << shift;
}

inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- GF(2)[x] as bitmasks -------------------------------------------------

inline unsigned degree_of(std::uint64_t f) {
  unsigned d = 0;
  while (f >> (d + 1)) ++d;
  return d;
}

inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = degree_of(m);
  while (a != 0 && degree_of(a) >= dm) a ^= m << (degree_of(a) - dm);
  return a;
}

/// Least irreducible monic polynomial of degree k over GF(2), by testing
/// every polynomial of degree 1..k-1 as a divisor.
inline std::uint64_t least_irreducible_gf2(unsigned k) {
  for (std::uint64_t f = std::uint64_t{1} << k; f < (std::uint64_t{2} << k); ++f) {
    bool reducible = false;
    for (std::uint64_t g = 2; g < (std::uint64_t{1} << k) && !reducible; ++g) reducible = gf2_mod(f, g) == 0;
    if (!reducible) return f;
  }
  return 0;
}

inline std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; b >> i; ++i)
    if ((b >> i) & 1) prod ^= a << i;
  return gf2_mod(prod, m);
}

// --- groups -----------------------------------------------------------------

/// x^k by repeated multiplication until the identity reappears.
inline std::uint64_t order_by_powers(const piset::Group& g, const piset::Element& x) {
  piset::Element power = x;
  const piset::Element one = g.identity();
  std::uint64_t k = 1;
  while (power != one) {
    power = g.multiply(power, x);
    ++k;
  }
  return k;
}

/// All elements of <gens> as a std::set, by naive fixpoint iteration.
inline std::set<piset::Element> closure_naive(const piset::Group& g, const std::vector<piset::Element>& gens) {
  std::set<piset::Element> elems{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<piset::Element> snapshot(elems.begin(), elems.end());
    for (const auto& a : snapshot)
      for (const auto& s : gens)
        if (elems.insert(g.multiply(a, s)).second) grew = true;
  }
  return elems;
}

/// Commutator subgroup from every commutator [x, y] over all pairs of elements.
inline std::set<piset::Element> derived_all_pairs(const piset::Group& g) {
  const auto all = closure_naive(g, g.generators());
  std::set<piset::Element> commutators;
  for (const auto& x : all)
    for (const auto& y : all) commutators.insert(g.commutator(x, y));
  return closure_naive(g, {commutators.begin(), commutators.end()});
}

}  // namespace oracle
