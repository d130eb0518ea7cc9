#include "cdlat/central_product.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace cdlat {

CentralProductSpec make_central_product_spec(const Group& a, const Group& b, std::span<const Element> u,
                                             std::span<const Element> v,
                                             std::span<const std::pair<Element, Element>> phi) {
  auto members = [](const Group& g, std::span<const Element> xs, const char* what) {
    ElementSet s(g.order());
    for (Element x : xs) {
      if (x >= g.order())
        throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " lists element " + std::to_string(x) +
                                                    " of a group of order " + std::to_string(g.order()));
      s.set(x);
    }
    s.set(0);
    return Subgroup::from_elements(g, std::move(s));
  };
  Subgroup su = members(a, u, "U");
  Subgroup sv = members(b, v, "V");
  std::vector<Element> map(a.order(), kUnmapped);
  for (const auto& [x, y] : phi) {
    if (x >= a.order() || !su.contains(x))
      throw Error(ErrorCode::NotIsomorphism, "phi maps " + std::to_string(x) + ", which is not in U");
    if (map[x] != kUnmapped && map[x] != y)
      throw Error(ErrorCode::NotIsomorphism, "phi assigns two images to " + std::to_string(x));
    map[x] = y;
  }
  // The identity needs no explicit pair.
  if (map[0] == kUnmapped) map[0] = 0;
  CentralProductSpec spec{a, b, su, sv, GroupHomomorphism{su, sv, std::move(map)}};
  validate(spec);
  return spec;
}

void validate(const CentralProductSpec& spec) {
  require_same_parent(spec.a, spec.u, "central product U");
  require_same_parent(spec.b, spec.v, "central product V");
  if (!spec.u.elements().is_subset_of(center(spec.a).elements()))
    throw Error(ErrorCode::NotCentral, "U is not contained in Z(" + spec.a.name() + ")");
  if (!spec.v.elements().is_subset_of(center(spec.b).elements()))
    throw Error(ErrorCode::NotCentral, "V is not contained in Z(" + spec.b.name() + ")");
  const auto& phi = spec.phi;
  if (!(phi.source == spec.u) || !(phi.target == spec.v))
    throw Error(ErrorCode::NotIsomorphism, "phi must map U to V");
  bool defined = phi.map.size() == spec.a.order();
  if (defined)
    spec.u.elements().for_each([&](Element x) { defined = defined && phi.map[x] != kUnmapped; });
  if (!defined) throw Error(ErrorCode::NotIsomorphism, "phi is not defined on all of U");
  if (!phi.is_homomorphism()) throw Error(ErrorCode::NotIsomorphism, "phi is not a homomorphism into V");
  if (!phi.is_bijective()) throw Error(ErrorCode::NotIsomorphism, "phi is not a bijection U -> V");
}

CentralProductResult central_product(const CentralProductSpec& spec, std::string name, const Limits& limits) {
  validate(spec);
  const Group& a = spec.a;
  const Group& b = spec.b;
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t nu = spec.u.order();
  const std::size_t order = na * nb / nu;
  if (order > limits.order_cap)
    throw Error(ErrorCode::OrderCapExceeded, "central product of order " + std::to_string(order) +
                                                 " exceeds cap " + std::to_string(limits.order_cap));
  if (name.empty()) name = nu == 1 ? a.name() + "x" + b.name() : a.name() + "*" + b.name();

  // N = {(u, phi(u)^-1)}; the coset of (x, y) is {(xu, y phi(u)^-1)}.
  std::vector<std::pair<Element, Element>> kernel;
  spec.u.elements().for_each([&](Element u) { kernel.emplace_back(u, b.inv(spec.phi(u))); });

  constexpr Element kNone = std::numeric_limits<Element>::max();
  std::vector<Element> coset(na * nb, kNone);
  std::vector<std::size_t> reps;  // smallest pair index of each coset, increasing
  for (std::size_t p = 0; p < na * nb; ++p) {
    if (coset[p] != kNone) continue;
    const auto cls = static_cast<Element>(reps.size());
    reps.push_back(p);
    const auto x = static_cast<Element>(p / nb);
    const auto y = static_cast<Element>(p % nb);
    for (const auto& [u, w] : kernel) coset[a.mul(x, u) * nb + b.mul(y, w)] = cls;
  }

  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    const auto xi = static_cast<Element>(reps[i] / nb);
    const auto yi = static_cast<Element>(reps[i] % nb);
    for (std::size_t j = 0; j < order; ++j) {
      const auto xj = static_cast<Element>(reps[j] / nb);
      const auto yj = static_cast<Element>(reps[j] % nb);
      table[i * order + j] = coset[a.mul(xi, xj) * nb + b.mul(yi, yj)];
    }
  }
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels())
    for (std::size_t r : reps)
      labels.push_back("(" + a.label(static_cast<Element>(r / nb)) + "," + b.label(static_cast<Element>(r % nb)) + ")");
  Group g = Group::from_trusted_table(std::move(name), order, std::move(table), std::move(labels));

  std::vector<Element> ma(na), mb(nb);
  for (std::size_t x = 0; x < na; ++x) ma[x] = coset[x * nb];
  for (std::size_t y = 0; y < nb; ++y) mb[y] = coset[y];
  GroupHomomorphism ea{Subgroup::whole(a), Subgroup::whole(g), std::move(ma)};
  GroupHomomorphism eb{Subgroup::whole(b), Subgroup::whole(g), std::move(mb)};
  Subgroup amalgam = intersection(ea.image(), eb.image());
  return {g, std::move(ea), std::move(eb), std::move(amalgam)};
}

bool is_central_decomposition(const Group& g, const Subgroup& a, const Subgroup& b) {
  require_same_parent(g, a, "central decomposition");
  require_same_parent(g, b, "central decomposition");
  return commutes(a, b) && product_set(g, a.elements(), b.elements()).count() == g.order();
}

bool is_proper_decomposition(const Group& g, const Subgroup& a, const Subgroup& b) {
  const ElementSet z = center(g).elements();
  // Z(G) < X < G as subgroups; Z(G) need not lie in a factor of G = AB.
  auto strictly_between = [&](const Subgroup& x) {
    return z.is_subset_of(x.elements()) && z.count() < x.order() && x.order() < g.order();
  };
  return strictly_between(a) && strictly_between(b);
}

std::vector<InternalDecomposition> internal_decompositions(const Group& g, const Limits& limits) {
  return internal_decompositions(all_subgroups(g, limits));
}

std::vector<InternalDecomposition> internal_decompositions(const SubgroupSet& all) {
  const Group& g = all.group();
  const std::size_t n = g.order();
  const ElementSet z = center(g).elements();
  const std::size_t zc = z.count();
  std::vector<std::optional<ElementSet>> cent(all.size());
  std::vector<InternalDecomposition> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& a = all[i];
    for (std::size_t j = i; j < all.size(); ++j) {
      const auto& b = all[j];
      const std::size_t inter = (a.elements() & b.elements()).count();
      if (a.order() * b.order() != n * inter) continue;
      if (!cent[i]) cent[i] = centralizer(g, a).elements();
      if (!b.elements().is_subset_of(*cent[i])) continue;
      auto proper_side = [&](const Subgroup& x) {
        return x.order() > zc && x.order() < n && z.is_subset_of(x.elements());
      };
      out.push_back({a, b, proper_side(a) && proper_side(b)});
    }
  }
  return out;
}

ElementSet pi_projection_set(const Group& g, const ElementSet& a, const ElementSet& b, const ElementSet& u,
                             Side side) {
  // a ∈ π_A(U) iff a ∈ U·B⁻¹ = UB; b ∈ π_B(U) iff b ∈ A⁻¹·U = AU.
  if (side == Side::A) return product_set(g, u, b) & a;
  return product_set(g, a, u) & b;
}

Subgroup pi_projection(const Group& g, const Subgroup& a, const Subgroup& b, const Subgroup& u, Side side) {
  require_same_parent(g, u, "pi_projection");
  if (!is_central_decomposition(g, a, b))
    throw Error(ErrorCode::NotCentralDecomposition, "G is not the central product of the given subgroups");
  return Subgroup::from_elements(g, pi_projection_set(g, a.elements(), b.elements(), u.elements(), side));
}

}  // namespace cdlat
