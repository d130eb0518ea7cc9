#pragma once

#include <vector>

#include "cdlat/group.hpp"

namespace cdlat::detail {

// Incrementally closed subgroup: `list` holds the members in discovery order
// and is closed under right multiplication by every entry of `gens`.
struct ClosureState {
  const Group* g;
  ElementSet bits;
  std::vector<Element> list;
  std::vector<Element> gens;

  explicit ClosureState(const Group& group) : g(&group), bits(group.order()), list{0} { bits.set(0); }

  /// Resume from an already closed subgroup and a generating set for it.
  ClosureState(const Group& group, const Subgroup& closed, std::vector<Element> generators)
      : g(&group), bits(closed.elements()), list(closed.elements().elements()), gens(std::move(generators)) {}

  void add(Element s) {
    if (bits.test(s)) return;
    gens.push_back(s);
    const std::size_t old = list.size();
    for (std::size_t i = 0; i < old; ++i) push(g->mul(list[i], s));
    for (std::size_t i = old; i < list.size(); ++i)
      for (Element x : gens) push(g->mul(list[i], x));
  }

  void push(Element y) {
    if (!bits.test(y)) {
      bits.set(y);
      list.push_back(y);
    }
  }
};

}  // namespace cdlat::detail
