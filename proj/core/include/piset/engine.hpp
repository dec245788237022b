#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "piset/element_set.hpp"
#include "piset/gf.hpp"
#include "piset/numtheory.hpp"

namespace piset {

class SpectrumSet;

/// Default number of elements any enumeration may visit.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

/// Bijection on {0, ..., n-1}; images()[i] is the image of point i.
class Permutation {
 public:
  /// Throws InvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<Word> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Word>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<Word>& images() const noexcept { return images_; }
  Word operator()(Word point) const { return images_.at(point); }

  /// Apply *this, then `other`.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Word> images_;
};

/// Order of a permutation as the lcm of its cycle lengths.
Natural perm_order(const Permutation& g);

/// n x n matrix over a finite field, entries stored row-major as encodings.
class SquareMatrix {
 public:
  SquareMatrix(Field field, std::size_t dim, std::vector<Field::Encoding> entries);

  static SquareMatrix identity(Field field, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Field::Encoding>& entries() const noexcept { return entries_; }
  Field::Encoding at(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }

  Field::Encoding determinant() const;
  bool invertible() const { return determinant() != 0; }

  SquareMatrix operator*(const SquareMatrix& other) const;
  /// Throws InvalidInput for singular matrices.
  SquareMatrix inverse() const;

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Field::Encoding> entries_;
};

/// Multiplication table of an ambient group (Sym(n) or GL(n, q)) acting on
/// canonical element encodings of fixed width.
class GroupArithmetic {
 public:
  virtual ~GroupArithmetic() = default;

  virtual std::size_t width() const noexcept = 0;
  virtual void identity(std::span<Word> out) const = 0;
  /// out = a * b. `out` must not alias either operand.
  virtual void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const = 0;
  virtual void invert(std::span<const Word> a, std::span<Word> out) const = 0;
  /// Least k >= 1 with a^k = 1. Throws CapExceeded past `cap`.
  virtual std::uint64_t order(std::span<const Word> a, std::uint64_t cap) const;
  virtual std::string format(std::span<const Word> a) const = 0;
  /// Throws InvalidInput if `a` is not a valid element encoding.
  virtual void validate(std::span<const Word> a) const = 0;
};

/// A finitely generated group: an ambient arithmetic plus generators.
/// Immutable; copies share the arithmetic.
class Group {
 public:
  enum class Kind { Permutation, Matrix };

  Group(std::shared_ptr<const GroupArithmetic> arithmetic, Kind kind, std::vector<Element> generators);

  static Group from_permutations(const std::vector<Permutation>& generators);
  static Group from_matrices(const std::vector<SquareMatrix>& generators);

  Kind kind() const noexcept { return kind_; }
  const GroupArithmetic& arithmetic() const noexcept { return *arithmetic_; }
  std::size_t width() const noexcept { return arithmetic_->width(); }
  const std::vector<Element>& generators() const noexcept { return generators_; }

  /// Same ambient group, different generators (subgroups, derived series).
  Group with_generators(std::vector<Element> generators) const;

  Element identity() const;
  Element multiply(std::span<const Word> a, std::span<const Word> b) const;
  Element inverse(std::span<const Word> a) const;
  /// a^-1 b^-1 a b
  Element commutator(std::span<const Word> a, std::span<const Word> b) const;
  /// g^-1 h g
  Element conjugate(std::span<const Word> h, std::span<const Word> g) const;
  bool is_identity(std::span<const Word> a) const;

 private:
  std::shared_ptr<const GroupArithmetic> arithmetic_;
  Kind kind_;
  std::vector<Element> generators_;
};

/// A subgroup together with the full list of its elements.
struct Subgroup {
  Group group;
  ElementSet elements;
  std::uint64_t order() const noexcept { return elements.size(); }
};

/// Least k >= 1 with x^k = 1, by repeated multiplication.
std::uint64_t element_order_generic(const Group& group, std::span<const Word> x, std::uint64_t cap = kDefaultCap);

/// Every element of <generators>, breadth-first from the identity under right
/// multiplication. Throws CapExceeded (with the partial count) past `cap`.
ElementSet enumerate(const Group& group, std::uint64_t cap = kDefaultCap);

/// Set of element orders of the group, computed from the full enumeration.
SpectrumSet spectrum_enumerate(const Group& group, std::uint64_t cap = kDefaultCap);

/// Smallest normal subgroup of `group` containing `seeds`.
Subgroup normal_closure(const Group& group, const std::vector<Element>& seeds, std::uint64_t cap = kDefaultCap);

/// Commutator subgroup, as the normal closure of the commutators of
/// generator pairs.
Subgroup derived_subgroup(const Group& group, std::uint64_t cap = kDefaultCap);

struct SolvabilityReport {
  bool solvable = false;
  /// |G|, |G'|, |G''|, ... up to the trivial group or the first repeat.
  std::vector<std::uint64_t> series_orders;
};

SolvabilityReport is_solvable(const Group& group, std::uint64_t cap = kDefaultCap);
bool is_perfect(const Group& group, std::uint64_t cap = kDefaultCap);

/// Conjugacy classes of a fully enumerated group, as lists of indices into
/// `elements`. Classes are ordered by their least index.
std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& group, const ElementSet& elements);

/// True iff the normal closure of every nontrivial element is the whole
/// group. Throws InvalidInput for the trivial group.
bool is_simple(const Group& group, std::uint64_t cap = kDefaultCap);

/// Enumerates the group and throws ValidationFailed unless its order is
/// `expected`. `name` is used in the message.
void validate_order(const Group& group, std::uint64_t expected, const std::string& name,
                    std::uint64_t cap = kDefaultCap);

}  // namespace piset
