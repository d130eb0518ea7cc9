#pragma once

// Slow, obviously-correct reference computations used to cross-check the
// library. None of them share code paths with the production algorithms
// beyond the Cayley table itself.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cdlat/cd_lattice.hpp"
#include "cdlat/central_product.hpp"
#include "cdlat/group.hpp"

namespace oracle {

using cdlat::Element;
using cdlat::ElementSet;
using cdlat::Group;

/// Checks identity, inverses and associativity over every triple. Returns an
/// empty string or a description of the first violation.
std::string group_axiom_violation(const Group& g);

/// Every subset containing the identity that is closed under multiplication.
/// Exponential; only for |G| <= 16.
std::vector<ElementSet> subgroups_by_subsets(const Group& g);

bool is_closed(const Group& g, const ElementSet& s);
ElementSet centralizer(const Group& g, const ElementSet& h);
std::uint64_t measure(const Group& g, const ElementSet& h);

/// Members of `all` of maximal measure, with every centralizer recomputed
/// pairwise. Returns the sorted member list and sets `best`.
std::vector<ElementSet> cd_by_measure_filter(const Group& g, const std::vector<ElementSet>& all, std::uint64_t& best);

/// {hk : h ∈ H, k ∈ K} over every pair.
ElementSet product(const Group& g, const ElementSet& h, const ElementSet& k);

/// π_A(U) / π_B(U) straight from the definition: walk every u ∈ U and every
/// factorization u = ab with a ∈ A, b ∈ B.
ElementSet pi_by_factorizations(const Group& g, const ElementSet& a, const ElementSet& b, const ElementSet& u,
                                bool a_side);

/// The subgroup generated by `seed`, by repeated squaring of the set.
ElementSet closure(const Group& g, const ElementSet& seed);

/// The same group with elements 1..n-1 renamed by a random permutation
/// (identity stays at 0), rebuilt through the validating table constructor.
Group relabeled(const Group& g, std::mt19937_64& rng);

/// A random subgroup: closure of 1-2 random elements.
ElementSet random_subgroup(const Group& g, std::mt19937_64& rng);

std::vector<ElementSet> sorted(std::vector<ElementSet> v);

}  // namespace oracle
