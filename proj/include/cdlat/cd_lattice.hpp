#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/subgroups.hpp"

namespace cdlat {

using Measure = std::uint64_t;

/// |H| · |C_G(H)|
Measure measure(const Group& g, const Subgroup& h);

/// Largest measure over all subgroups. Only subgroups containing Z(G) are
/// examined; every maximiser contains the center.
Measure max_measure(const Group& g, const Limits& limits = {});

/// The subgroups of maximal measure with their cover relation.
///
/// Node indices follow the canonical SubgroupSet order, so node 0 is the
/// bottom and the last node is the top.
class CdLattice {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

  const Group& group() const noexcept { return nodes_.group(); }
  Measure max_measure() const noexcept { return max_measure_; }
  const SubgroupSet& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Subgroup& operator[](std::size_t i) const { return nodes_[i]; }

  /// Cover pairs sorted by (lower, upper).
  const std::vector<Edge>& hasse_edges() const noexcept { return edges_; }
  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t height(std::size_t node) const { return height_.at(node); }
  std::size_t depth(std::size_t node) const { return depth_.at(node); }
  std::size_t lattice_height() const noexcept { return height_[top_]; }

  std::optional<std::size_t> index_of(const ElementSet& members) const { return nodes_.index_of(members); }
  std::optional<std::size_t> index_of(const Subgroup& h) const { return nodes_.index_of(h); }
  bool contains(const Subgroup& h) const { return nodes_.contains(h); }

  /// HK; throws LatticeViolation if the product is not a node.
  std::size_t join(std::size_t x, std::size_t y) const;
  /// H ∩ K; throws LatticeViolation if the intersection is not a node.
  std::size_t meet(std::size_t x, std::size_t y) const;
  /// The node C_G(H); throws LatticeViolation if the centralizer is not a node.
  std::size_t duality(std::size_t x) const;

  std::vector<std::size_t> atoms() const;
  std::vector<std::size_t> coatoms() const;

  /// Assembles the lattice structure over an explicit node set. Throws
  /// LatticeViolation if there is no unique top or bottom and
  /// GradednessViolation if the cover graph admits no rank function.
  static CdLattice from_nodes(SubgroupSet nodes, Measure max_measure);

 private:
  explicit CdLattice(SubgroupSet nodes) : nodes_(std::move(nodes)) {}

  SubgroupSet nodes_;
  Measure max_measure_ = 1;
  std::vector<Edge> edges_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> depth_;
};

CdLattice cd_lattice(const Group& g, const Limits& limits = {});

}  // namespace cdlat
