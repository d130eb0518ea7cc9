#include <doctest.h>

#include <random>

#include "cdlat/catalog.hpp"
#include "cdlat/group.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cdlat;

namespace {

std::vector<std::vector<Element>> cyclic_rows(std::size_t n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<Element>((i + j) % n);
  return rows;
}

}  // namespace

TEST_CASE("cayley table ingestion accepts a group") {
  const Group g = group_from_cayley_table(cyclic_rows(3), "C3");
  CHECK(g.order() == 3);
  CHECK(g.is_abelian());
  CHECK(g.inv(1) == 2);
  CHECK(g.element_order(1) == 3);
  CHECK(oracle::group_axiom_violation(g).empty());
}

TEST_CASE("cayley table ingestion reports the violated axiom") {
  // The order-5 loop: a Latin square with identity 0 and x·x = 1 for all x.
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(error_code([&] { group_from_cayley_table(loop, "L5"); }) == ErrorCode::NotAssociative);

  auto shifted = cyclic_rows(3);
  std::swap(shifted[0], shifted[1]);
  CHECK(error_code([&] { group_from_cayley_table(shifted, "x"); }) == ErrorCode::NoIdentityAtZero);

  const std::vector<std::vector<Element>> repeated = {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
  CHECK(error_code([&] { group_from_cayley_table(repeated, "x"); }) == ErrorCode::NotLatinSquare);

  const std::vector<std::vector<Element>> ragged = {{0, 1}, {1}};
  CHECK(error_code([&] { group_from_cayley_table(ragged, "x"); }) == ErrorCode::MalformedTable);
  const std::vector<std::vector<Element>> out_of_range = {{0, 1}, {1, 7}};
  CHECK(error_code([&] { group_from_cayley_table(out_of_range, "x"); }) == ErrorCode::MalformedTable);
  CHECK(error_code([&] { group_from_cayley_table({}, "x"); }) == ErrorCode::MalformedTable);

  Limits small;
  small.order_cap = 4;
  CHECK(error_code([&] { group_from_cayley_table(cyclic_rows(5), "C5", small); }) == ErrorCode::OrderCapExceeded);
}

TEST_CASE("the error message names the code") {
  try {
    group_from_cayley_table({}, "x");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("MalformedTable", 0) == 0);
  }
}

TEST_CASE("sampled associativity still catches the loop above the exhaustive bound") {
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  Limits sampled;
  sampled.exhaustive_associativity_up_to = 2;
  CHECK(error_code([&] { group_from_cayley_table(loop, "L5", sampled); }) == ErrorCode::NotAssociative);
}

TEST_CASE("permutation parsing composes cycles left to right") {
  CHECK(parse_permutation("(1 2 3)", 3) == std::vector<Element>{1, 2, 0});
  // (1 2) then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
  CHECK(parse_permutation("(1 2)(2 3)", 3) == std::vector<Element>{2, 0, 1});
  CHECK(parse_permutation("()", 2) == std::vector<Element>{0, 1});
  CHECK(format_permutation(std::vector<Element>{1, 2, 0}) == "(1 2 3)");
  CHECK(format_permutation(std::vector<Element>{0, 1}) == "()");

  CHECK(error_code([] { parse_permutation("(1 2", 3); }) == ErrorCode::MalformedCycle);
  CHECK(error_code([] { parse_permutation("(1 x)", 3); }) == ErrorCode::MalformedCycle);
  CHECK(error_code([] { parse_permutation("(1 5)", 3); }) == ErrorCode::PointOutOfRange);
  CHECK(error_code([] { parse_permutation("(0 1)", 3); }) == ErrorCode::PointOutOfRange);
}

TEST_CASE("permutation groups close their generators") {
  const std::vector<std::string> s3{"(1 2 3)", "(1 2)"};
  const Group g = group_from_permutations(s3, 3, "S3");
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(oracle::group_axiom_violation(g).empty());
  CHECK(g.label(0) == "()");

  const std::vector<std::string> none;
  CHECK(group_from_permutations(none, 4).order() == 1);
  CHECK(error_code([&] { group_from_permutations(s3, 0); }) == ErrorCode::PointOutOfRange);

  Limits small;
  small.order_cap = 5;
  CHECK(error_code([&] { group_from_permutations(s3, 3, "S3", small); }) == ErrorCode::OrderCapExceeded);
}

TEST_CASE("subgroups validate membership and parents") {
  const Group q8 = catalog_group("Q8");
  const Element i = element(q8, "i");
  CHECK(error_code([&] { Subgroup::from_elements(q8, set_of(q8, {0, i})); }) == ErrorCode::NotASubgroup);
  const Subgroup ci = subgroup_closure(q8, std::vector<Element>{i});
  CHECK(ci.order() == 4);
  CHECK(ci.is_abelian());
  CHECK(ci.is_subgroup_of(Subgroup::whole(q8)));

  const Group other = catalog_group("Q8");
  CHECK(error_code([&] { (void)ci.is_subgroup_of(Subgroup::whole(other)); }) == ErrorCode::ParentMismatch);
  CHECK(error_code([&] { subgroup_closure(q8, std::vector<Element>{8}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("centralizers, centers and commuting subgroups") {
  const Group q8 = catalog_group("Q8");
  const Subgroup z = center(q8);
  CHECK(z.order() == 2);
  CHECK(z.contains(element(q8, "-1")));
  CHECK(centralizer(q8, Subgroup::whole(q8)) == z);
  CHECK(centralizer(q8, Subgroup::trivial(q8)).is_whole());
  const Subgroup ci = subgroup_closure(q8, std::vector<Element>{element(q8, "i")});
  const Subgroup cj = subgroup_closure(q8, std::vector<Element>{element(q8, "j")});
  CHECK(centralizer(q8, ci) == ci);
  CHECK(commutes(ci, z));
  CHECK_FALSE(commutes(ci, cj));
  CHECK(center(catalog_group("S3")).is_trivial());
}

TEST_CASE("centralizer agrees with the pairwise oracle on random subgroups") {
  std::mt19937_64 rng(20240611);
  for (const char* name : {"D8", "Q8", "A4", "S4", "D12", "X+27", "X-27", "Q16"}) {
    const Group g = catalog_group(name);
    for (int trial = 0; trial < 20; ++trial) {
      const ElementSet h = oracle::random_subgroup(g, rng);
      const Subgroup sh = Subgroup::from_elements(g, h);
      CHECK(centralizer(g, sh).elements() == oracle::centralizer(g, h));
    }
  }
}

TEST_CASE("joins, intersections and products of random subgroups") {
  std::mt19937_64 rng(7);
  for (const char* name : {"S4", "D16", "E2^4", "X+27", "A5"}) {
    const Group g = catalog_group(name);
    for (int trial = 0; trial < 25; ++trial) {
      const Subgroup h = Subgroup::from_elements(g, oracle::random_subgroup(g, rng));
      const Subgroup k = Subgroup::from_elements(g, oracle::random_subgroup(g, rng));
      const Subgroup j = join(h, k);
      CHECK(j.elements() == oracle::closure(g, h.elements() | k.elements()));
      const Subgroup m = intersection(h, k);
      CHECK(m.elements() == (h.elements() & k.elements()));
      const SetProduct p = set_product(h, k);
      CHECK(p.elements == oracle::product(g, h.elements(), k.elements()));
      CHECK(p.elements.count() * m.order() == h.order() * k.order());
      CHECK(p.is_subgroup == oracle::is_closed(g, p.elements));
      CHECK(subgroup_closure(g, generators_of(h)) == h);
    }
  }
}

TEST_CASE("direct products embed both factors") {
  const Group q8 = catalog_group("Q8");
  const Group c2 = catalog_group("C2");
  const ProductGroup p = direct_product(q8, c2);
  CHECK(p.group.order() == 16);
  CHECK(p.group.name() == "Q8xC2");
  CHECK(oracle::group_axiom_violation(p.group).empty());
  CHECK(p.embed_a.is_homomorphism());
  CHECK(p.embed_a.is_injective());
  CHECK(p.embed_b.is_homomorphism());
  CHECK(commutes(p.embed_a.image(), p.embed_b.image()));
  CHECK(intersection(p.embed_a.image(), p.embed_b.image()).is_trivial());

  Limits small;
  small.order_cap = 15;
  CHECK(error_code([&] { direct_product(q8, c2, small); }) == ErrorCode::OrderCapExceeded);
}

TEST_CASE("induced groups keep the identity and round-trip subsets") {
  const Group s4 = catalog_group("S4");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Subgroup h = Subgroup::from_elements(s4, oracle::random_subgroup(s4, rng));
    const InducedGroup local = induced_group(h);
    CHECK(local.group.order() == h.order());
    CHECK(local.to_parent[0] == 0);
    CHECK(oracle::group_axiom_violation(local.group).empty());
    const ElementSet all_local = ElementSet::full(local.group.order());
    CHECK(local.lift(all_local) == h.elements());
    CHECK(local.lower(h.elements()) == all_local);
    for (Element x = 0; x < local.group.order(); ++x)
      for (Element y = 0; y < local.group.order(); ++y)
        CHECK(local.to_parent[local.group.mul(x, y)] == s4.mul(local.to_parent[x], local.to_parent[y]));
  }
}

TEST_CASE("homomorphism predicates") {
  const Group c4 = catalog_group("C4");
  const Subgroup whole = Subgroup::whole(c4);
  const GroupHomomorphism id = GroupHomomorphism::identity(whole);
  CHECK(id.is_homomorphism());
  CHECK(id.is_bijective());
  GroupHomomorphism square{whole, whole, {0, 2, 0, 2}};
  CHECK(square.is_homomorphism());
  CHECK_FALSE(square.is_injective());
  GroupHomomorphism broken{whole, whole, {0, 1, 1, 3}};
  CHECK_FALSE(broken.is_homomorphism());
}

TEST_CASE("element sets order canonically") {
  const auto a = ElementSet::of(8, std::vector<Element>{0, 2});
  const auto b = ElementSet::of(8, std::vector<Element>{0, 3});
  const auto c = ElementSet::of(8, std::vector<Element>{0, 1, 5});
  CHECK(canonical_less(a, b));
  CHECK_FALSE(canonical_less(b, a));
  CHECK(canonical_less(b, c));
  CHECK_FALSE(canonical_less(a, a));
  const auto wide = ElementSet::of(130, std::vector<Element>{0, 64, 129});
  CHECK(wide.count() == 3);
  CHECK(wide.elements() == std::vector<Element>{0, 64, 129});
  CHECK(wide.first_missing() == 1);
  CHECK(ElementSet::full(130).first_missing() == 130);
}
