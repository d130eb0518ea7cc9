#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/subgroups.hpp"

namespace cdlat {

/// Data for the external central product of A and B amalgamating U ≤ Z(A)
/// with V ≤ Z(B) along phi: U → V.
struct CentralProductSpec {
  Group a;
  Group b;
  Subgroup u;
  Subgroup v;
  GroupHomomorphism phi;
};

/// Assembles a spec from element lists and (u, phi(u)) pairs and validates it.
CentralProductSpec make_central_product_spec(const Group& a, const Group& b, std::span<const Element> u,
                                             std::span<const Element> v,
                                             std::span<const std::pair<Element, Element>> phi);

/// Throws NotCentral or NotIsomorphism.
void validate(const CentralProductSpec& spec);

struct CentralProductResult {
  Group group;
  GroupHomomorphism embed_a;
  GroupHomomorphism embed_b;
  Subgroup amalgam;  // image(embed_a) ∩ image(embed_b)
};

/// (A × B)/N with N = {(u, phi(u)^-1)}. Each element is a coset of N, numbered
/// by its smallest pair index a·|B| + b, so the identity coset is element 0.
CentralProductResult central_product(const CentralProductSpec& spec, std::string name = {},
                                     const Limits& limits = {});

/// An internal central decomposition G = AB with [A, B] = 1.
struct InternalDecomposition {
  Subgroup a;
  Subgroup b;
  bool proper = false;  // Z(G) < A < G and Z(G) < B < G
};

/// AB = G as sets and [A, B] = 1.
bool is_central_decomposition(const Group& g, const Subgroup& a, const Subgroup& b);
bool is_proper_decomposition(const Group& g, const Subgroup& a, const Subgroup& b);

/// Every unordered pair {A, B} of subgroups with AB = G and [A, B] = 1, listed
/// once with A the member of smaller canonical index.
std::vector<InternalDecomposition> internal_decompositions(const Group& g, const Limits& limits = {});
std::vector<InternalDecomposition> internal_decompositions(const SubgroupSet& all_subgroups_of_g);

enum class Side { A, B };

/// The A-parts (or B-parts) of every factorization u = ab of every u ∈ U.
/// Throws NotCentralDecomposition if G ≠ AB or [A, B] ≠ 1.
Subgroup pi_projection(const Group& g, const Subgroup& a, const Subgroup& b, const Subgroup& u, Side side);

/// The same set, without validating the decomposition or the result.
ElementSet pi_projection_set(const Group& g, const ElementSet& a, const ElementSet& b, const ElementSet& u,
                             Side side);

}  // namespace cdlat
