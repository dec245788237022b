#include "piset/gf.hpp"

#include <algorithm>

#include "piset/errors.hpp"

namespace piset {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

Poly digits_of(std::uint64_t encoding, std::uint32_t p, unsigned len) {
  Poly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(encoding % p);
    encoding /= p;
  }
  return out;
}

std::uint64_t encode(const Poly& poly, std::uint32_t p) {
  std::uint64_t value = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * p + *it;
  return value;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is small.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial b over GF(p).
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  // Any factorization has a monic factor of degree <= k/2.
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits_of(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct Field::Impl {
  std::uint32_t p = 2;
  unsigned k = 1;
  std::uint32_t q = 2;
  Poly modulus;
  std::uint64_t modulus_encoding = 0;
  std::uint32_t primitive = 1;
  std::vector<std::uint32_t> exp;  // length 2(q-1), exp[i] = primitive^i
  std::vector<std::uint32_t> log;  // length q, log[0] unused

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t result = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      result += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return result;
  }

  // Schoolbook product reduced by the modulus; used only while building tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const Poly pa = digits_of(a, p, k), pb = digits_of(b, p, k);
    Poly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    Poly r = poly_mod(prod, modulus, p);
    return static_cast<std::uint32_t>(encode(r, p));
  }
};

Field Field::make(std::uint32_t p, unsigned k) {
  if (p < 2 || !is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidInput("field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxSize)
      throw BudgetExceeded("field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds 2^20 elements");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(q);

  // Monic degree-k polynomials have encodings in [q, 2q).
  for (std::uint64_t enc = q; enc < 2 * q; ++enc) {
    Poly f = digits_of(enc, p, k + 1);
    if (is_irreducible(f, p)) {
      impl->modulus = std::move(f);
      impl->modulus_encoding = enc;
      break;
    }
  }

  const std::uint32_t order = impl->q - 1;
  std::vector<std::uint32_t> order_primes;
  for (const auto& pp : factorize(order == 0 ? 1 : order)) order_primes.push_back(static_cast<std::uint32_t>(pp.prime));
  if (order == 1) order_primes.clear();

  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e != 0) {
      if (e & 1) result = impl->slow_mul(result, a);
      a = impl->slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };
  for (std::uint32_t a = 1; a < impl->q; ++a) {
    bool primitive = true;
    for (std::uint32_t r : order_primes) {
      if (slow_pow(a, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      impl->primitive = a;
      break;
    }
  }

  impl->exp.resize(2 * std::size_t{order});
  impl->log.assign(impl->q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    impl->exp[i] = x;
    impl->exp[i + order] = x;
    impl->log[x] = i;
    x = impl->slow_mul(x, impl->primitive);
  }
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->k; }
std::uint32_t Field::size() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
std::uint64_t Field::modulus_encoding() const noexcept { return impl_->modulus_encoding; }
Field::Encoding Field::primitive() const noexcept { return impl_->primitive; }

Field::Encoding Field::add(Encoding a, Encoding b) const noexcept { return impl_->add(a, b); }

Field::Encoding Field::neg(Encoding a) const noexcept {
  const std::uint32_t p = impl_->p;
  if (p == 2) return a;
  std::uint32_t result = 0, scale = 1;
  for (unsigned i = 0; i < impl_->k; ++i) {
    result += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return result;
}

Field::Encoding Field::mul(Encoding a, Encoding b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return impl_->exp[impl_->log[a] + impl_->log[b]];
}

Field::Encoding Field::inv(Encoding a) const {
  if (a == 0) throw InvalidInput("inverse of zero in " + describe());
  const std::uint32_t order = impl_->q - 1;
  return impl_->exp[(order - impl_->log[a]) % order];
}

Field::Encoding Field::pow(Encoding a, Natural e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint32_t order = impl_->q - 1;
  const auto reduced = static_cast<std::uint64_t>(e % order);
  return impl_->exp[static_cast<std::uint32_t>(std::uint64_t{impl_->log[a]} * reduced % order)];
}

std::uint32_t Field::multiplicative_order(Encoding a) const {
  if (a == 0) throw InvalidInput("zero has no multiplicative order");
  const std::uint32_t order = impl_->q - 1;
  return order / static_cast<std::uint32_t>(gcd(order, impl_->log[a]));
}

FieldElement Field::element(Encoding a) const {
  if (!contains(a))
    throw InvalidInput("encoding " + std::to_string(a) + " is not an element of " + describe());
  return FieldElement(*this, a);
}

std::string Field::describe() const {
  if (impl_->k == 1) return "GF(" + std::to_string(impl_->p) + ")";
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) + ")";
}

FieldElement::FieldElement(Field field, Field::Encoding value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_))
    throw InvalidInput("encoding " + std::to_string(value_) + " is not an element of " + field_.describe());
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_))
    throw InvalidInput("operands belong to different fields (" + field_.describe() + ", " +
                       other.field_.describe() + ")");
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_field(other);
  return {field_, field_.add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  require_same_field(other);
  return {field_, field_.sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_field(other);
  return {field_, field_.mul(value_, other.value_)};
}

}  // namespace piset
