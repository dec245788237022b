#include "piset/engine.hpp"

#include <algorithm>
#include <numeric>

#include "piset/errors.hpp"
#include "piset/spectrum.hpp"

namespace piset {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidInput("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Word img = images_[i];
    if (img >= images_.size())
      throw InvalidInput("image of point " + std::to_string(i) + " is " + std::to_string(img) +
                         ", outside 0.." + std::to_string(images_.size() - 1));
    if (seen[img]) throw InvalidInput("point " + std::to_string(img) + " is the image of two points");
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Word> images(degree);
  std::iota(images.begin(), images.end(), Word{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Word>> cycles) {
  std::vector<Word> images(degree);
  std::iota(images.begin(), images.end(), Word{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    std::vector<Word> points(cycle);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Word from = points[i];
      if (from >= degree) throw InvalidInput("cycle point " + std::to_string(from) + " exceeds degree");
      if (used[from]) throw InvalidInput("cycles are not disjoint at point " + std::to_string(from));
      used[from] = true;
      images[from] = points[(i + 1) % points.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) throw InvalidInput("permutation degree mismatch");
  std::vector<Word> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = other.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Word> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<Word>(i);
  return Permutation(std::move(out));
}

namespace {

Natural cycle_lcm(std::span<const Word> images) {
  std::vector<bool> seen(images.size(), false);
  Natural result = 1;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    Natural length = 0;
    for (std::size_t x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      ++length;
    }
    result = lcm(result, length);
  }
  return result;
}

}  // namespace

Natural perm_order(const Permutation& g) { return cycle_lcm(g.images()); }

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix::SquareMatrix(Field field, std::size_t dim, std::vector<Field::Encoding> entries)
    : field_(std::move(field)), dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw InvalidInput("matrix dimension must be at least 1");
  if (entries_.size() != dim_ * dim_)
    throw InvalidInput("expected " + std::to_string(dim_ * dim_) + " matrix entries, got " +
                       std::to_string(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!field_.contains(entries_[i]))
      throw InvalidInput("entry " + std::to_string(i) + " = " + std::to_string(entries_[i]) +
                         " is not an element of " + field_.describe());
  }
}

SquareMatrix SquareMatrix::identity(Field field, std::size_t dim) {
  std::vector<Field::Encoding> entries(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1;
  return SquareMatrix(std::move(field), dim, std::move(entries));
}

namespace {

// Row-reduces `m` (n x cols) in place; returns the determinant of the
// leading n x n block. When cols == 2n the right half ends up holding the
// inverse of a nonsingular left half.
Field::Encoding gauss_jordan(const Field& f, std::vector<Field::Encoding>& m, std::size_t n, std::size_t cols) {
  Field::Encoding det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[col * cols + j]);
      det = f.neg(det);
    }
    const Field::Encoding lead = m[col * cols + col];
    det = f.mul(det, lead);
    const Field::Encoding lead_inv = f.inv(lead);
    for (std::size_t j = 0; j < cols; ++j) m[col * cols + j] = f.mul(m[col * cols + j], lead_inv);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Field::Encoding factor = m[row * cols + col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        m[row * cols + j] = f.sub(m[row * cols + j], f.mul(factor, m[col * cols + j]));
    }
  }
  return det;
}

}  // namespace

Field::Encoding SquareMatrix::determinant() const {
  std::vector<Field::Encoding> work = entries_;
  return gauss_jordan(field_, work, dim_, dim_);
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& other) const {
  if (!(field_ == other.field_) || dim_ != other.dim_) throw InvalidInput("matrix shape or field mismatch");
  std::vector<Field::Encoding> out(dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Field::Encoding a = entries_[i * dim_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        out[i * dim_ + j] = field_.add(out[i * dim_ + j], field_.mul(a, other.entries_[k * dim_ + j]));
    }
  return SquareMatrix(field_, dim_, std::move(out));
}

SquareMatrix SquareMatrix::inverse() const {
  const std::size_t cols = 2 * dim_;
  std::vector<Field::Encoding> work(dim_ * cols, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) work[i * cols + j] = entries_[i * dim_ + j];
    work[i * cols + dim_ + i] = 1;
  }
  if (gauss_jordan(field_, work, dim_, cols) == 0) throw InvalidInput("matrix is singular");
  std::vector<Field::Encoding> out(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] = work[i * cols + dim_ + j];
  return SquareMatrix(field_, dim_, std::move(out));
}

// ---------------------------------------------------------------------------
// Ambient arithmetics

std::uint64_t GroupArithmetic::order(std::span<const Word> a, std::uint64_t cap) const {
  Element one(width()), power(a.begin(), a.end()), next(width());
  identity(one);
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (std::equal(power.begin(), power.end(), one.begin())) return k;
    multiply(power, a, next);
    power.swap(next);
  }
  throw CapExceeded("element order exceeds cap " + std::to_string(cap), cap);
}

namespace {

class SymmetricArithmetic final : public GroupArithmetic {
 public:
  explicit SymmetricArithmetic(std::size_t degree) : degree_(degree) {}

  std::size_t width() const noexcept override { return degree_; }

  void identity(std::span<Word> out) const override { std::iota(out.begin(), out.end(), Word{0}); }

  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const override {
    for (std::size_t i = 0; i < degree_; ++i) out[i] = b[a[i]];
  }

  void invert(std::span<const Word> a, std::span<Word> out) const override {
    for (std::size_t i = 0; i < degree_; ++i) out[a[i]] = static_cast<Word>(i);
  }

  std::uint64_t order(std::span<const Word> a, std::uint64_t cap) const override {
    const Natural k = cycle_lcm(a);
    if (k > cap) throw CapExceeded("element order exceeds cap " + std::to_string(cap), cap);
    return static_cast<std::uint64_t>(k);
  }

  std::string format(std::span<const Word> a) const override {
    std::string out;
    std::vector<bool> seen(degree_, false);
    for (std::size_t start = 0; start < degree_; ++start) {
      if (seen[start] || a[start] == start) continue;
      out += "(";
      for (std::size_t x = start; !seen[x]; x = a[x]) {
        seen[x] = true;
        if (x != start) out += " ";
        out += std::to_string(x);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  void validate(std::span<const Word> a) const override {
    if (a.size() != degree_) throw InvalidInput("permutation has wrong degree");
    Permutation(std::vector<Word>(a.begin(), a.end()));
  }

 private:
  std::size_t degree_;
};

class MatrixArithmetic final : public GroupArithmetic {
 public:
  MatrixArithmetic(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  std::size_t width() const noexcept override { return dim_ * dim_; }

  void identity(std::span<Word> out) const override {
    std::fill(out.begin(), out.end(), Word{0});
    for (std::size_t i = 0; i < dim_; ++i) out[i * dim_ + i] = 1;
  }

  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const override {
    std::fill(out.begin(), out.end(), Word{0});
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Word x = a[i * dim_ + k];
        if (x == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
          out[i * dim_ + j] = field_.add(out[i * dim_ + j], field_.mul(x, b[k * dim_ + j]));
      }
  }

  void invert(std::span<const Word> a, std::span<Word> out) const override {
    const SquareMatrix inv = SquareMatrix(field_, dim_, {a.begin(), a.end()}).inverse();
    std::copy(inv.entries().begin(), inv.entries().end(), out.begin());
  }

  std::string format(std::span<const Word> a) const override {
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      out += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j != 0) out += ", ";
        out += std::to_string(a[i * dim_ + j]);
      }
      out += "]";
    }
    return out + "]";
  }

  void validate(std::span<const Word> a) const override {
    if (!SquareMatrix(field_, dim_, {a.begin(), a.end()}).invertible()) throw InvalidInput("matrix is singular");
  }

 private:
  Field field_;
  std::size_t dim_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Group

Group::Group(std::shared_ptr<const GroupArithmetic> arithmetic, Kind kind, std::vector<Element> generators)
    : arithmetic_(std::move(arithmetic)), kind_(kind), generators_(std::move(generators)) {
  for (const Element& g : generators_) {
    if (g.size() != arithmetic_->width()) throw InvalidInput("generator width does not match the ambient group");
  }
}

Group Group::from_permutations(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw InvalidInput("a group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  std::vector<Element> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw InvalidInput("generators have different degrees");
    gens.push_back(g.images());
  }
  return Group(std::make_shared<SymmetricArithmetic>(degree), Kind::Permutation, std::move(gens));
}

Group Group::from_matrices(const std::vector<SquareMatrix>& generators) {
  if (generators.empty()) throw InvalidInput("a group needs at least one generator");
  const Field& field = generators.front().field();
  const std::size_t dim = generators.front().dim();
  std::vector<Element> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const SquareMatrix& g = generators[i];
    if (!(g.field() == field) || g.dim() != dim)
      throw InvalidInput("generator " + std::to_string(i) + " has a different field or dimension");
    if (!g.invertible()) throw InvalidInput("generator " + std::to_string(i) + " is singular");
    gens.emplace_back(g.entries().begin(), g.entries().end());
  }
  return Group(std::make_shared<MatrixArithmetic>(field, dim), Kind::Matrix, std::move(gens));
}

Group Group::with_generators(std::vector<Element> generators) const {
  return Group(arithmetic_, kind_, std::move(generators));
}

Element Group::identity() const {
  Element out(width());
  arithmetic_->identity(out);
  return out;
}

Element Group::multiply(std::span<const Word> a, std::span<const Word> b) const {
  Element out(width());
  arithmetic_->multiply(a, b, out);
  return out;
}

Element Group::inverse(std::span<const Word> a) const {
  Element out(width());
  arithmetic_->invert(a, out);
  return out;
}

Element Group::commutator(std::span<const Word> a, std::span<const Word> b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Element Group::conjugate(std::span<const Word> h, std::span<const Word> g) const {
  return multiply(multiply(inverse(g), h), g);
}

bool Group::is_identity(std::span<const Word> a) const {
  const Element one = identity();
  return std::equal(a.begin(), a.end(), one.begin(), one.end());
}

// ---------------------------------------------------------------------------
// Closure machinery

namespace {

// Subgroup generated incrementally. Invariant: `elements` is closed under
// right multiplication by every generator added so far.
class Closure {
 public:
  Closure(const Group& group, std::uint64_t cap) : group_(group), elements_(group.width()), cap_(cap) {
    elements_.insert(group.identity());
  }

  /// Adds `g` as a generator unless it is already a member. Returns whether
  /// the subgroup grew.
  bool add_generator(const Element& g) {
    if (elements_.contains(g)) return false;
    generators_.push_back(g);
    const std::size_t old_size = elements_.size();
    Element product(group_.width());
    const auto& arith = group_.arithmetic();

    // Old elements only need the new generator; new ones need all of them.
    for (std::size_t i = 0; i < old_size; ++i) {
      arith.multiply(elements_[i], g, product);
      insert(product);
    }
    for (std::size_t i = old_size; i < elements_.size(); ++i) {
      for (const Element& gen : generators_) {
        arith.multiply(elements_[i], gen, product);
        insert(product);
      }
    }
    return true;
  }

  const ElementSet& elements() const noexcept { return elements_; }
  ElementSet take_elements() { return std::move(elements_); }
  const std::vector<Element>& generators() const noexcept { return generators_; }

 private:
  void insert(const Element& e) {
    if (elements_.contains(e)) return;
    if (elements_.size() >= cap_)
      throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap_) + " elements", elements_.size());
    elements_.insert(e);
  }

  const Group& group_;
  ElementSet elements_;
  std::vector<Element> generators_;
  std::uint64_t cap_;
};

}  // namespace

std::uint64_t element_order_generic(const Group& group, std::span<const Word> x, std::uint64_t cap) {
  if (cap == 0) throw InvalidInput("order cap must be at least 1");
  return group.arithmetic().GroupArithmetic::order(x, cap);
}

ElementSet enumerate(const Group& group, std::uint64_t cap) {
  if (cap == 0) throw InvalidInput("enumeration cap must be at least 1");
  const auto& arith = group.arithmetic();
  ElementSet elements(group.width());
  elements.insert(group.identity());
  Element product(group.width());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Element& gen : group.generators()) {
      arith.multiply(elements[i], gen, product);
      if (elements.contains(product)) continue;
      if (elements.size() >= cap)
        throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap) + " elements", elements.size());
      elements.insert(product);
    }
  }
  return elements;
}

SpectrumSet spectrum_enumerate(const Group& group, std::uint64_t cap) {
  const ElementSet elements = enumerate(group, cap);
  const auto& arith = group.arithmetic();
  std::vector<Natural> orders;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Natural k = arith.order(elements[i], elements.size());
    if (std::find(orders.begin(), orders.end(), k) == orders.end()) orders.push_back(k);
  }
  return SpectrumSet::from_values(std::move(orders));
}

Subgroup normal_closure(const Group& group, const std::vector<Element>& seeds, std::uint64_t cap) {
  if (cap == 0) throw InvalidInput("enumeration cap must be at least 1");
  Closure closure(group, cap);
  for (const Element& s : seeds) closure.add_generator(s);

  std::vector<Element> ambient_inverses;
  for (const Element& g : group.generators()) ambient_inverses.push_back(group.inverse(g));

  // A subgroup is normal once every generator's conjugate by every ambient
  // generator lies inside it.
  Element tmp(group.width()), conj(group.width());
  const auto& arith = group.arithmetic();
  for (std::size_t i = 0; i < closure.generators().size(); ++i) {
    for (std::size_t j = 0; j < group.generators().size(); ++j) {
      const Element h = closure.generators()[i];
      arith.multiply(ambient_inverses[j], h, tmp);
      arith.multiply(tmp, group.generators()[j], conj);
      closure.add_generator(conj);
    }
  }

  std::vector<Element> gens = closure.generators();
  if (gens.empty()) gens.push_back(group.identity());
  return Subgroup{group.with_generators(std::move(gens)), closure.take_elements()};
}

Subgroup derived_subgroup(const Group& group, std::uint64_t cap) {
  const auto& gens = group.generators();
  std::vector<Element> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Element c = group.commutator(gens[i], gens[j]);
      if (!group.is_identity(c)) commutators.push_back(std::move(c));
    }
  return normal_closure(group, commutators, cap);
}

SolvabilityReport is_solvable(const Group& group, std::uint64_t cap) {
  SolvabilityReport report;
  report.series_orders.push_back(enumerate(group, cap).size());
  Group current = group;
  while (report.series_orders.back() > 1) {
    Subgroup next = derived_subgroup(current, cap);
    const std::uint64_t order = next.order();
    report.series_orders.push_back(order);
    if (order == report.series_orders[report.series_orders.size() - 2]) break;
    current = std::move(next.group);
  }
  report.solvable = report.series_orders.back() == 1;
  return report;
}

bool is_perfect(const Group& group, std::uint64_t cap) {
  const std::uint64_t order = enumerate(group, cap).size();
  return derived_subgroup(group, cap).order() == order;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& group, const ElementSet& elements) {
  const auto& arith = group.arithmetic();
  std::vector<Element> inverses;
  for (const Element& g : group.generators()) inverses.push_back(group.inverse(g));

  std::vector<bool> assigned(elements.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  Element tmp(group.width()), conj(group.width());
  for (std::size_t start = 0; start < elements.size(); ++start) {
    if (assigned[start]) continue;
    std::vector<std::size_t> cls{start};
    assigned[start] = true;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (std::size_t j = 0; j < inverses.size(); ++j) {
        arith.multiply(inverses[j], elements[cls[k]], tmp);
        arith.multiply(tmp, group.generators()[j], conj);
        const auto idx = elements.find(conj);
        if (!idx) throw InvalidInput("element set is not closed under conjugation");
        if (!assigned[*idx]) {
          assigned[*idx] = true;
          cls.push_back(*idx);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_simple(const Group& group, std::uint64_t cap) {
  const ElementSet elements = enumerate(group, cap);
  if (elements.size() == 1) throw InvalidInput("the trivial group is not simple by convention");
  for (const auto& cls : conjugacy_classes(group, elements)) {
    const Element rep = elements.element(cls.front());
    if (group.is_identity(rep)) continue;
    if (normal_closure(group, {rep}, cap).order() != elements.size()) return false;
  }
  return true;
}

void validate_order(const Group& group, std::uint64_t expected, const std::string& name, std::uint64_t cap) {
  if (expected > cap)
    throw CapExceeded(name + ": expected order " + std::to_string(expected) + " exceeds cap " + std::to_string(cap), 0);
  std::uint64_t actual = 0;
  try {
    actual = enumerate(group, expected).size();
  } catch (const CapExceeded&) {
    throw ValidationFailed(name + ": generators produce more than the expected " + std::to_string(expected) +
                           " elements");
  }
  if (actual != expected)
    throw ValidationFailed(name + ": generated group has order " + std::to_string(actual) + ", expected " +
                           std::to_string(expected));
}

}  // namespace piset
