#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

/// A deduplicated collection of subgroups of one group, kept in canonical
/// order (order of the subgroup, then sorted element lists lexicographically).
class SubgroupSet {
 public:
  explicit SubgroupSet(Group g) : group_(std::move(g)) {}
  SubgroupSet(Group g, std::vector<ElementSet> members);

  const Group& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  const Subgroup& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  std::optional<std::size_t> index_of(const ElementSet& members) const;
  std::optional<std::size_t> index_of(const Subgroup& h) const { return index_of(h.elements()); }
  bool contains(const Subgroup& h) const { return h.group().same_as(group_) && index_of(h).has_value(); }

  /// Same members regardless of parent identity.
  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b);

 private:
  Group group_;
  std::vector<Subgroup> items_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Every subgroup of G. Starts from the cyclic subgroups and joins each found
/// subgroup with every cyclic subgroup it does not contain until nothing new
/// appears.
SubgroupSet all_subgroups(const Group& g, const Limits& limits = {});

/// Every subgroup H with floor ≤ H ≤ G, found the same way with `floor` as the
/// only seed.
SubgroupSet subgroups_containing(const Group& g, const Subgroup& floor, const Limits& limits = {});

/// Members X of s with lower ≤ X ≤ upper.
SubgroupSet interval(const SubgroupSet& s, const Subgroup& lower, const Subgroup& upper);

}  // namespace cdlat
