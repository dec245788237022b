#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace piset {

/// Exact unsigned integer used for every spectrum computation. All helpers
/// below check for overflow and throw OutOfRange instead of wrapping.
__extension__ typedef unsigned __int128 Natural;

inline constexpr Natural kNaturalMax = ~Natural{0};

std::string to_string(Natural n);
/// Parses a decimal string; throws InvalidInput on junk or overflow.
Natural parse_natural(const std::string& text);

Natural checked_add(Natural a, Natural b);
Natural checked_sub(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);
/// 2^e for e <= 127.
Natural pow2(unsigned e);

Natural gcd(Natural a, Natural b);
Natural lcm(Natural a, Natural b);

/// gcd(2^m - 1, 2^n - 1) evaluated as 2^gcd(m, n) - 1. Requires 1 <= m, n <= 126.
Natural mersenne_gcd(unsigned m, unsigned n);

/// Deterministic primality. Exact for n < 3317044064679887385961981; larger
/// inputs throw OutOfRange.
bool is_prime(Natural n);

/// Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

struct PrimePower {
  Natural prime;
  unsigned exponent;
};

/// Default largest trial divisor used by factorize() and divisors().
inline constexpr std::uint64_t kDefaultTrialBudget = std::uint64_t{1} << 32;

/// Prime factorization by trial division. Stops early once the cofactor is
/// prime; throws BudgetExceeded if a composite cofactor survives every trial
/// divisor up to `budget`.
std::vector<PrimePower> factorize(Natural n, std::uint64_t budget = kDefaultTrialBudget);

/// All positive divisors of n (n >= 1), ascending.
std::vector<Natural> divisors(Natural n, std::uint64_t budget = kDefaultTrialBudget);

struct SuzukiGcdFacts {
  Natural plus_plus;    // gcd(2^(2p)+1, 2^(2q)+1)
  Natural plus_minus;   // gcd(2^(2p)+1, 2^q-1)
  Natural minus_plus;   // gcd(2^(2q)+1, 2^p-1)
  friend bool operator==(const SuzukiGcdFacts&, const SuzukiGcdFacts&) = default;
};

/// The three gcds behind the pairwise Suzuki spectrum intersection, by exact
/// Euclid. p and q must be distinct odd primes with 2*max(p, q) <= 126.
SuzukiGcdFacts suzuki_gcd_facts(unsigned p, unsigned q);

}  // namespace piset
