#include "cdlat/element_set.hpp"

#include <cassert>

namespace cdlat {

ElementSet ElementSet::of(std::size_t universe, std::span<const Element> elements) {
  ElementSet s(universe);
  for (Element x : elements) {
    assert(x < universe);
    s.set(x);
  }
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::none() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::size_t ElementSet::first_missing() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (~words_[w] != 0) {
      const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_one(words_[w]));
      return x < universe_ ? x : universe_;
    }
  }
  return universe_;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::size_t ElementSet::hash() const noexcept {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal cardinality: the first position where the sorted lists differ is
  // decided by the lowest bit where the sets differ; whoever holds it is smaller.
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff != 0) return (wa[i] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

}  // namespace cdlat
