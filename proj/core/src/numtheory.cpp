#include "piset/numtheory.hpp"

#include <algorithm>
#include <array>

#include "piset/errors.hpp"

namespace piset {

namespace {

// Miller-Rabin with the first 13 prime bases is exact below this bound.
const Natural kPrimalityLimit = static_cast<Natural>(3317044064679ULL) * 1000000000000ULL + 887385961981ULL;

Natural mulmod(Natural a, Natural b, Natural m) {
  if (m <= UINT64_MAX) return (a % m) * (b % m) % m;
  // Double-and-add; m < 2^82 here so 2*a never overflows.
  a %= m;
  b %= m;
  Natural result = 0;
  while (b != 0) {
    if (b & 1) {
      result += a;
      if (result >= m) result -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return result;
}

Natural powmod(Natural base, Natural exp, Natural m) {
  Natural result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool probable_prime_exact(Natural n) {
  static constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kBases) {
    Natural x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Natural n) {
  if (n == 0) return "0";
  std::string digits;
  while (n != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw InvalidInput("expected a non-negative integer, got an empty string");
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidInput("expected a non-negative integer, got '" + text + "'");
    try {
      value = checked_add(checked_mul(value, 10), static_cast<Natural>(c - '0'));
    } catch (const OutOfRange&) {
      throw InvalidInput("integer '" + text + "' exceeds 128 bits");
    }
  }
  return value;
}

Natural checked_add(Natural a, Natural b) {
  if (a > kNaturalMax - b) throw OutOfRange("128-bit addition overflow");
  return a + b;
}

Natural checked_sub(Natural a, Natural b) {
  if (b > a) throw OutOfRange("natural subtraction underflow");
  return a - b;
}

Natural checked_mul(Natural a, Natural b) {
  if (a != 0 && b > kNaturalMax / a) throw OutOfRange("128-bit multiplication overflow");
  return a * b;
}

Natural pow2(unsigned e) {
  if (e > 127) throw OutOfRange("2^" + std::to_string(e) + " does not fit in 128 bits");
  return Natural{1} << e;
}

Natural gcd(Natural a, Natural b) {
  while (b != 0) {
    Natural r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Natural lcm(Natural a, Natural b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

Natural mersenne_gcd(unsigned m, unsigned n) {
  if (m < 1 || n < 1 || m > 126 || n > 126)
    throw OutOfRange("mersenne_gcd parameters must lie in [1, 126]");
  unsigned d = static_cast<unsigned>(gcd(m, n));
  return pow2(d) - 1;
}

bool is_prime(Natural n) {
  if (n >= kPrimalityLimit)
    throw OutOfRange("is_prime is only exact below 3317044064679887385961981, got " + to_string(n));
  return probable_prime_exact(n);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(Natural n, std::uint64_t budget) {
  if (n == 0) throw InvalidInput("cannot factorize 0");
  std::vector<PrimePower> factors;
  auto cofactor_is_prime = [](Natural m) { return m < kPrimalityLimit && probable_prime_exact(m); };

  auto extract = [&](Natural d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e != 0) factors.push_back({d, e});
    return e != 0;
  };

  extract(2);
  Natural d = 3;
  while (n > 1) {
    if (d * d > n || cofactor_is_prime(n)) {
      factors.push_back({n, 1});
      break;
    }
    while (n % d != 0 && d * d <= n) {
      d += 2;
      if (d > budget && d * d <= n)
        throw BudgetExceeded("trial division budget " + std::to_string(budget) +
                             " exhausted with composite cofactor " + to_string(n));
    }
    if (n % d != 0) {
      factors.push_back({n, 1});
      break;
    }
    extract(d);
    d += 2;
  }
  return factors;
}

std::vector<Natural> divisors(Natural n, std::uint64_t budget) {
  if (n == 0) throw InvalidInput("divisors() requires n >= 1");
  std::vector<Natural> result{1};
  for (const auto& [prime, exponent] : factorize(n, budget)) {
    const std::size_t base = result.size();
    Natural power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

SuzukiGcdFacts suzuki_gcd_facts(unsigned p, unsigned q) {
  auto odd_prime = [](unsigned x) { return x > 2 && is_prime(x); };
  if (!odd_prime(p) || !odd_prime(q) || p == q)
    throw InvalidInput("suzuki_gcd_facts needs two distinct odd primes, got " + std::to_string(p) + " and " +
                       std::to_string(q));
  if (2 * std::max(p, q) > 126) throw OutOfRange("suzuki_gcd_facts requires 2*max(p, q) <= 126");
  const Natural fp = pow2(2 * p) + 1;
  const Natural fq = pow2(2 * q) + 1;
  return {gcd(fp, fq), gcd(fp, pow2(q) - 1), gcd(fq, pow2(p) - 1)};
}

}  // namespace piset
