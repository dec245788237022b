#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "piset/numtheory.hpp"

namespace piset {

class FieldElement;

/// Finite field GF(p^k) in a polynomial basis.
///
/// Elements are canonical integers in [0, q): the coefficient of x^i is the
/// i-th base-p digit. The modulus is the monic irreducible polynomial of
/// degree k with the least such encoding, so every encoding is reproducible.
/// Fields are immutable and cheap to copy (shared state).
class Field {
 public:
  using Encoding = std::uint32_t;

  static constexpr std::uint32_t kMaxSize = std::uint32_t{1} << 20;

  /// Throws InvalidInput if p is not prime or k == 0, BudgetExceeded if p^k > 2^20.
  static Field make(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint32_t size() const noexcept;
  /// Coefficients of the modulus, constant term first; length degree()+1.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  /// Modulus packed as base-p digits (e.g. 11 for x^3 + x + 1).
  std::uint64_t modulus_encoding() const noexcept;

  bool contains(Encoding a) const noexcept { return a < size(); }

  Encoding zero() const noexcept { return 0; }
  Encoding one() const noexcept { return 1; }
  Encoding add(Encoding a, Encoding b) const noexcept;
  Encoding neg(Encoding a) const noexcept;
  Encoding sub(Encoding a, Encoding b) const noexcept { return add(a, neg(b)); }
  Encoding mul(Encoding a, Encoding b) const noexcept;
  /// Throws InvalidInput on zero.
  Encoding inv(Encoding a) const;
  Encoding pow(Encoding a, Natural e) const noexcept;
  /// Element of least encoding whose multiplicative order is q - 1.
  Encoding primitive() const noexcept;
  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Encoding a) const;

  FieldElement element(Encoding a) const;
  std::string describe() const;

  /// Fields with equal (p, k) are the same field: the modulus is deterministic.
  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree();
  }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend class FieldElement;
};

/// A value tied to its field. Mixing elements of different Field objects
/// throws InvalidInput.
class FieldElement {
 public:
  FieldElement(Field field, Field::Encoding value);

  const Field& field() const noexcept { return field_; }
  Field::Encoding value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }
  FieldElement pow(Natural e) const { return {field_, field_.pow(value_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void require_same_field(const FieldElement& other) const;

  Field field_;
  Field::Encoding value_;
};

}  // namespace piset
