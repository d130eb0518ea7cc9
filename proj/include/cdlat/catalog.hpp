#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

/// Builds a named group from a fixed presentation. Recognised names:
///
///   C<n>        cyclic, element k is a^k
///   D<2n>       dihedral of order 2n, elements r^k s^e
///   Q<2^k>      generalized quaternion (k >= 3); Q8 is labelled 1, i, -1, -i, j, k, -j, -k
///   S<n>, A<n>  symmetric / alternating on n <= 5 points, cycle-notation labels
///   E<p>^<k>    elementary abelian of order p^k, coordinate-vector labels
///   X+8, X-8    D8 and Q8 under their extraspecial names
///   X+27, X-27  Heisenberg group mod 3 (exponent 3) and C9 ⋊ C3 (exponent 9)
///
/// Element numbering is breadth-first from the listed generators and therefore
/// identical on every run.
Group catalog_group(std::string_view name, const Limits& limits = {});

bool is_catalog_name(std::string_view name);

/// The fixed list of named groups shipped for verification runs, sorted by
/// (order, name), restricted to order <= max_order.
std::vector<std::string> standard_catalog(std::size_t max_order = 32);

}  // namespace cdlat
