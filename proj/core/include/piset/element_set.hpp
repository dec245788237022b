#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace piset {

using Word = std::uint32_t;
/// Canonical encoding of a group element: permutation images, or the
/// row-major field encodings of a matrix.
using Element = std::vector<Word>;

/// Deduplicated, insertion-ordered store of fixed-width elements.
///
/// Elements live back to back in one arena; an open-addressing table of
/// indices gives O(1) membership. Index i always refers to the i-th element
/// inserted.
class ElementSet {
 public:
  explicit ElementSet(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  std::span<const Word> operator[](std::size_t i) const noexcept {
    return {data_.data() + i * width_, width_};
  }
  Element element(std::size_t i) const {
    auto e = (*this)[i];
    return {e.begin(), e.end()};
  }

  /// Returns the element's index and whether it was newly inserted.
  std::pair<std::size_t, bool> insert(std::span<const Word> e);
  std::optional<std::size_t> find(std::span<const Word> e) const;
  bool contains(std::span<const Word> e) const { return find(e).has_value(); }

  void reserve(std::size_t n);

 private:
  static constexpr std::uint32_t kEmpty = UINT32_MAX;

  std::uint64_t hash(std::span<const Word> e) const noexcept;
  bool equal_at(std::size_t index, std::span<const Word> e) const noexcept;
  void rehash(std::size_t slot_count);

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Word> data_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace piset
