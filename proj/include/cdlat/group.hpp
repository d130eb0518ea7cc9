#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/element_set.hpp"
#include "cdlat/error.hpp"

namespace cdlat {

/// Size guards shared by every construction and enumeration.
struct Limits {
  std::size_t order_cap = 2048;
  std::size_t enumeration_budget = 1'000'000;
  std::size_t exhaustive_associativity_up_to = 512;
};

/// A finite group stored as its full Cayley table. Element 0 is the identity.
///
/// Groups are immutable and cheap to copy; copies share the table. Two Group
/// values are the same group (for parent checks) only if they share storage.
class Group {
 public:
  Group();  // trivial group

  /// Skips the axiom checks. Callers must guarantee the table is a group with
  /// identity 0 (products of groups, closures of permutations, ...).
  static Group from_trusted_table(std::string name, std::size_t order, std::vector<Element> table,
                                  std::vector<std::string> labels = {});

  const std::string& name() const noexcept { return data_->name; }
  std::size_t order() const noexcept { return data_->order; }

  Element mul(Element a, Element b) const noexcept { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  static constexpr Element identity() noexcept { return 0; }

  std::span<const Element> table() const noexcept { return data_->table; }
  std::span<const Element> inverses() const noexcept { return data_->inverse; }

  bool is_abelian() const noexcept { return data_->abelian; }
  std::size_t element_order(Element x) const noexcept;

  /// Human-readable name of an element (cycle notation, quaternion unit, ...)
  /// or its index when the group carries no labels.
  std::string label(Element x) const;
  bool has_labels() const noexcept { return !data_->labels.empty(); }
  std::optional<Element> find(std::string_view label) const;

  Group renamed(std::string name) const;

  bool same_as(const Group& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data {
    std::string name;
    std::size_t order = 1;
    std::vector<Element> table{0};
    std::vector<Element> inverse{0};
    std::vector<std::string> labels;
    bool abelian = true;
  };
  explicit Group(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// A subgroup, stored as a membership bitset over its parent's elements.
class Subgroup {
 public:
  /// Validates closure; throws NotASubgroup otherwise.
  static Subgroup from_elements(const Group& g, ElementSet members);
  /// Caller guarantees members is closed and contains the identity.
  static Subgroup from_trusted(const Group& g, ElementSet members);
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);

  const Group& group() const noexcept { return group_; }
  const ElementSet& elements() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.count(); }
  bool contains(Element x) const noexcept { return members_.test(x); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == group_.order(); }

  /// this ≤ other; both must share a parent.
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.group_.same_as(b.group_) && a.members_ == b.members_;
  }

 private:
  Subgroup(Group g, ElementSet members) : group_(std::move(g)), members_(std::move(members)) {}

  Group group_;
  ElementSet members_;
};

inline constexpr Element kUnmapped = 0xffffffffU;

/// A map between two subgroups, given element by element. `map` is indexed by
/// the source parent's elements; entries outside the source are kUnmapped.
struct GroupHomomorphism {
  Subgroup source;
  Subgroup target;
  std::vector<Element> map;

  Element operator()(Element x) const noexcept { return map[x]; }

  /// Every source element maps into the target and map(ab) = map(a)map(b).
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_bijective() const;
  Subgroup image() const;

  static GroupHomomorphism identity(const Subgroup& s);
};

// ---------------------------------------------------------------------------
// Construction

/// Validates the group axioms. Associativity is checked exhaustively up to
/// limits.exhaustive_associativity_up_to and on 10n² random triples above.
Group group_from_cayley_table(const std::vector<std::vector<Element>>& table, std::string name,
                              const Limits& limits = {});

/// Closes permutation generators (1-based cycle notation, cycles composed left
/// to right) and tabulates the result in breadth-first discovery order.
Group group_from_permutations(std::span<const std::string> generators, std::size_t degree,
                              std::string name = {}, const Limits& limits = {});

/// Images of 0..degree-1 under a permutation written in cycle notation.
std::vector<Element> parse_permutation(std::string_view cycles, std::size_t degree);
std::string format_permutation(std::span<const Element> image);

/// Enumerates the closure of `generators` under `mul` breadth first. Elements
/// are numbered in discovery order starting from `identity`.
template <class T, class Mul, class Label>
Group group_from_generators(std::string name, const std::vector<T>& generators, const T& identity,
                            Mul mul, Label label, const Limits& limits = {}) {
  std::map<T, Element> index;
  std::vector<T> elements{identity};
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const T& g : generators) {
      T y = mul(elements[i], g);
      if (index.find(y) != index.end()) continue;
      if (elements.size() >= limits.order_cap)
        throw Error(ErrorCode::OrderCapExceeded,
                    name + " has more than " + std::to_string(limits.order_cap) + " elements");
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(mul(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& e : elements) labels.push_back(label(e));
  return Group::from_trusted_table(std::move(name), n, std::move(table), std::move(labels));
}

struct ProductGroup {
  Group group;
  GroupHomomorphism embed_a;
  GroupHomomorphism embed_b;
};

/// A×B on pairs, the pair (a, b) stored at index a·|B| + b.
ProductGroup direct_product(const Group& a, const Group& b, const Limits& limits = {});

/// The subgroup's own Cayley table. Elements keep their relative order, so the
/// identity stays at 0; `to_parent[i]` is the parent index of element i.
struct InducedGroup {
  Group group;
  std::vector<Element> to_parent;
  std::size_t parent_order = 1;

  /// Local bitset to parent bitset.
  ElementSet lift(const ElementSet& local) const;
  /// Parent bitset (contained in the subgroup) to local bitset.
  ElementSet lower(const ElementSet& parent) const;
};

InducedGroup induced_group(const Subgroup& h, std::string name = {});

// ---------------------------------------------------------------------------
// Subgroup arithmetic

Subgroup subgroup_closure(const Group& g, std::span<const Element> seed);
Subgroup subgroup_closure(const Group& g, const ElementSet& seed);

/// Smallest subgroup containing both.
Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup intersection(const Subgroup& h, const Subgroup& k);

/// A generating set found greedily in increasing element order.
std::vector<Element> generators_of(const Subgroup& h);

Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup center(const Group& g);

/// True iff ab = ba for every a in A and b in B.
bool commutes(const Subgroup& a, const Subgroup& b);

struct SetProduct {
  ElementSet elements;
  bool is_subgroup = false;
};

/// The set {hk : h ∈ H, k ∈ K} and whether it is closed.
SetProduct set_product(const Subgroup& h, const Subgroup& k);

/// hK for every coset: the product set HK without the closure test.
ElementSet product_set(const Group& g, const ElementSet& h, const ElementSet& k);

void require_same_parent(const Group& g, const Subgroup& h, std::string_view what);
void require_same_parent(const Subgroup& a, const Subgroup& b, std::string_view what);

}  // namespace cdlat
