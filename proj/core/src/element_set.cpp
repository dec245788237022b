#include "piset/element_set.hpp"

#include <algorithm>
#include <bit>

#include "piset/errors.hpp"

namespace piset {

ElementSet::ElementSet(std::size_t width) : width_(width), slots_(16, kEmpty) {
  if (width_ == 0) throw InvalidInput("element width must be positive");
}

std::uint64_t ElementSet::hash(std::span<const Word> e) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Word w : e) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h ^ (h >> 33);
}

bool ElementSet::equal_at(std::size_t index, std::span<const Word> e) const noexcept {
  return std::equal(e.begin(), e.end(), data_.begin() + static_cast<std::ptrdiff_t>(index * width_));
}

std::optional<std::size_t> ElementSet::find(std::span<const Word> e) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t slot = hash(e) & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t idx = slots_[slot];
    if (idx == kEmpty) return std::nullopt;
    if (equal_at(idx, e)) return idx;
  }
}

std::pair<std::size_t, bool> ElementSet::insert(std::span<const Word> e) {
  if (e.size() != width_) throw InvalidInput("element width mismatch");
  if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash(e) & mask;
  for (;; slot = (slot + 1) & mask) {
    const std::uint32_t idx = slots_[slot];
    if (idx == kEmpty) break;
    if (equal_at(idx, e)) return {idx, false};
  }
  if (count_ >= kEmpty) throw OutOfRange("element set exceeds 2^32 - 1 elements");
  slots_[slot] = static_cast<std::uint32_t>(count_);
  data_.insert(data_.end(), e.begin(), e.end());
  return {count_++, true};
}

void ElementSet::reserve(std::size_t n) {
  data_.reserve(n * width_);
  if (2 * n > slots_.size()) rehash(std::bit_ceil(2 * n));
}

void ElementSet::rehash(std::size_t slot_count) {
  slots_.assign(slot_count, kEmpty);
  const std::size_t mask = slot_count - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t slot = hash((*this)[i]) & mask;
    while (slots_[slot] != kEmpty) slot = (slot + 1) & mask;
    slots_[slot] = static_cast<std::uint32_t>(i);
  }
}

}  // namespace piset
