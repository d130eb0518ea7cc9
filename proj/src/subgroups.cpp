#include "cdlat/subgroups.hpp"

#include <algorithm>
#include <deque>

#include "closure_state.hpp"

namespace cdlat {

SubgroupSet::SubgroupSet(Group g, std::vector<ElementSet> members) : group_(std::move(g)) {
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  items_.reserve(members.size());
  index_.reserve(members.size());
  for (auto& m : members) {
    index_.emplace(m, items_.size());
    items_.push_back(Subgroup::from_trusted(group_, std::move(m)));
  }
}

std::optional<std::size_t> SubgroupSet::index_of(const ElementSet& members) const {
  const auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].elements() != b[i].elements()) return false;
  return true;
}

namespace {

struct Found {
  Subgroup subgroup;
  std::vector<Element> gens;
};

// One generator per distinct cyclic subgroup, smallest element index first.
std::vector<Element> cyclic_generators(const Group& g) {
  std::unordered_map<ElementSet, Element, ElementSetHash> seen;
  std::vector<Element> reps;
  for (std::size_t x = 1; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    detail::ClosureState st(g);
    st.add(e);
    if (seen.emplace(std::move(st.bits), e).second) reps.push_back(e);
  }
  return reps;
}

SubgroupSet close_under_cyclic_joins(const Group& g, const Subgroup& seed, const Limits& limits) {
  if (g.order() > limits.order_cap)
    throw Error(ErrorCode::OrderCapExceeded,
                g.name() + " has order " + std::to_string(g.order()) + ", cap is " + std::to_string(limits.order_cap));
  const std::vector<Element> cyclics = cyclic_generators(g);

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<Found> found;
  std::deque<std::size_t> work;
  auto record = [&](detail::ClosureState&& st) {
    if (index.find(st.bits) != index.end()) return;
    if (found.size() >= limits.enumeration_budget)
      throw Error(ErrorCode::EnumerationBudgetExceeded,
                  g.name() + " has more than " + std::to_string(limits.enumeration_budget) + " subgroups");
    index.emplace(st.bits, found.size());
    found.push_back({Subgroup::from_trusted(g, std::move(st.bits)), std::move(st.gens)});
    work.push_back(found.size() - 1);
  };

  record(detail::ClosureState(g, seed, generators_of(seed)));
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    for (Element c : cyclics) {
      if (found[i].subgroup.contains(c)) continue;
      detail::ClosureState st(g, found[i].subgroup, found[i].gens);
      st.add(c);
      record(std::move(st));
    }
  }

  std::vector<ElementSet> members;
  members.reserve(found.size());
  for (auto& f : found) members.push_back(f.subgroup.elements());
  return SubgroupSet(g, std::move(members));
}

}  // namespace

SubgroupSet all_subgroups(const Group& g, const Limits& limits) {
  return close_under_cyclic_joins(g, Subgroup::trivial(g), limits);
}

SubgroupSet subgroups_containing(const Group& g, const Subgroup& floor, const Limits& limits) {
  require_same_parent(g, floor, "subgroups_containing");
  return close_under_cyclic_joins(g, floor, limits);
}

SubgroupSet interval(const SubgroupSet& s, const Subgroup& lower, const Subgroup& upper) {
  require_same_parent(s.group(), lower, "interval");
  require_same_parent(s.group(), upper, "interval");
  if (!lower.is_subgroup_of(upper)) throw Error(ErrorCode::NotNested, "lower bound not contained in upper bound");
  std::vector<ElementSet> members;
  for (const auto& x : s)
    if (lower.elements().is_subset_of(x.elements()) && x.elements().is_subset_of(upper.elements()))
      members.push_back(x.elements());
  return SubgroupSet(s.group(), std::move(members));
}

}  // namespace cdlat
