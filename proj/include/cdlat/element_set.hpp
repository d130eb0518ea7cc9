#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cdlat {

using Element = std::uint32_t;

/// Fixed-width membership bitset over the elements 0..n-1 of a group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet of(std::size_t universe, std::span<const Element> elements);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool test(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;

  /// Lowest element not in the set, or universe() if the set is full.
  std::size_t first_missing() const noexcept;

  std::vector<Element> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order: by cardinality, then by the sorted element lists compared
/// lexicographically.
bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cdlat
