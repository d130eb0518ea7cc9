#include "cdlat/cd_lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cdlat {

Measure measure(const Group& g, const Subgroup& h) {
  require_same_parent(g, h, "measure");
  return static_cast<Measure>(h.order()) * static_cast<Measure>(centralizer(g, h).order());
}

Measure max_measure(const Group& g, const Limits& limits) { return cd_lattice(g, limits).max_measure(); }

CdLattice cd_lattice(const Group& g, const Limits& limits) {
  const SubgroupSet candidates = subgroups_containing(g, center(g), limits);
  Measure best = 0;
  std::vector<Measure> m(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    m[i] = measure(g, candidates[i]);
    best = std::max(best, m[i]);
  }
  std::vector<ElementSet> members;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (m[i] == best) members.push_back(candidates[i].elements());
  return CdLattice::from_nodes(SubgroupSet(g, std::move(members)), best);
}

CdLattice CdLattice::from_nodes(SubgroupSet nodes, Measure max_measure) {
  CdLattice l(std::move(nodes));
  l.max_measure_ = max_measure;
  const std::size_t n = l.nodes_.size();
  if (n == 0) throw Error(ErrorCode::LatticeViolation, "empty node set");

  auto below = [&](std::size_t i, std::size_t j) {
    return i != j && l.nodes_[i].elements().is_subset_of(l.nodes_[j].elements());
  };

  // Canonical order sorts by cardinality, so a proper subset always has the
  // smaller index.
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) lt[i][j] = below(i, j);

  l.bottom_ = 0;
  l.top_ = n - 1;
  for (std::size_t i = 1; i < n; ++i)
    if (!lt[0][i]) throw Error(ErrorCode::LatticeViolation, "no unique bottom node");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!lt[i][n - 1]) throw Error(ErrorCode::LatticeViolation, "no unique top node");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (std::size_t k = i + 1; k < j && cover; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) l.edges_.emplace_back(i, j);
    }

  std::vector<std::vector<std::size_t>> up(n), down(n);
  for (const auto& [a, b] : l.edges_) {
    up[a].push_back(b);
    down[b].push_back(a);
  }

  // Longest chains from the bottom and to the top.
  l.height_.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a : down[j]) l.height_[j] = std::max(l.height_[j], l.height_[a] + 1);
  l.depth_.assign(n, 0);
  for (std::size_t j = n; j-- > 0;)
    for (std::size_t b : up[j]) l.depth_[j] = std::max(l.depth_[j], l.depth_[b] + 1);

  // Shortest chains from the bottom must agree with the longest ones.
  std::vector<std::size_t> layer(n, std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{0};
  layer[0] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : up[x])
      if (layer[y] == std::numeric_limits<std::size_t>::max()) {
        layer[y] = layer[x] + 1;
        queue.push_back(y);
      }
  }

  const std::size_t total = l.height_[l.top_];
  for (std::size_t x = 0; x < n; ++x) {
    if (layer[x] != l.height_[x] || l.height_[x] + l.depth_[x] != total)
      throw Error(ErrorCode::GradednessViolation,
                  "node " + std::to_string(x) + " has chains of different lengths from the bottom or to the top");
  }
  for (const auto& [a, b] : l.edges_)
    if (l.height_[b] != l.height_[a] + 1)
      throw Error(ErrorCode::GradednessViolation,
                  "cover " + std::to_string(a) + " < " + std::to_string(b) + " skips a rank");
  return l;
}

std::size_t CdLattice::join(std::size_t x, std::size_t y) const {
  const auto p = set_product(nodes_[x], nodes_[y]);
  const auto idx = nodes_.index_of(p.elements);
  if (!p.is_subgroup || !idx)
    throw Error(ErrorCode::LatticeViolation,
                "product of nodes " + std::to_string(x) + " and " + std::to_string(y) + " is not a node");
  return *idx;
}

std::size_t CdLattice::meet(std::size_t x, std::size_t y) const {
  const auto idx = nodes_.index_of(nodes_[x].elements() & nodes_[y].elements());
  if (!idx)
    throw Error(ErrorCode::LatticeViolation,
                "intersection of nodes " + std::to_string(x) + " and " + std::to_string(y) + " is not a node");
  return *idx;
}

std::size_t CdLattice::duality(std::size_t x) const {
  const auto idx = nodes_.index_of(centralizer(group(), nodes_[x]));
  if (!idx) throw Error(ErrorCode::LatticeViolation, "centralizer of node " + std::to_string(x) + " is not a node");
  return *idx;
}

std::vector<std::size_t> CdLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (height_[i] == 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> CdLattice::coatoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (depth_[i] == 1) out.push_back(i);
  return out;
}

}  // namespace cdlat
