#include <doctest.h>

#include <random>

#include "cdlat/catalog.hpp"
#include "cdlat/cd_lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cdlat;

namespace {

std::vector<ElementSet> members(const CdLattice& cd) {
  std::vector<ElementSet> out;
  for (const auto& h : cd.nodes()) out.push_back(h.elements());
  return out;
}

}  // namespace

TEST_CASE("CD(Q8) is the interval above the center") {
  const Group q8 = catalog_group("Q8");
  const CdLattice cd = cd_lattice(q8);
  CHECK(cd.size() == 5);
  CHECK(cd.max_measure() == 16);
  CHECK(cd.lattice_height() == 2);
  CHECK(cd[cd.bottom()] == center(q8));
  CHECK(cd[cd.top()].is_whole());
  const auto atoms = cd.atoms();
  REQUIRE(atoms.size() == 3);
  for (std::size_t a : atoms) {
    CHECK(cd[a].order() == 4);
    CHECK(cd.height(a) == 1);
    CHECK(cd.depth(a) == 1);
  }
  CHECK(cd.coatoms() == atoms);
  CHECK(cd.hasse_edges().size() == 6);
}

TEST_CASE("small CD lattices") {
  // S3: the rotations alone, m = 3·3.
  const CdLattice s3 = cd_lattice(catalog_group("S3"));
  CHECK(s3.size() == 1);
  CHECK(s3.max_measure() == 9);
  CHECK(s3[0].order() == 3);
  // A4: the Klein four-group, m = 4·4.
  const CdLattice a4 = cd_lattice(catalog_group("A4"));
  CHECK(a4.size() == 1);
  CHECK(a4[0].order() == 4);
  CHECK(a4.max_measure() == 16);
  // S4: only the trivial group and S4, both of measure 24.
  const CdLattice s4 = cd_lattice(catalog_group("S4"));
  CHECK(s4.size() == 2);
  CHECK(s4.max_measure() == 24);
  CHECK(s4.lattice_height() == 1);
  // D8: every subgroup containing the center, m = 16.
  const CdLattice d8 = cd_lattice(catalog_group("D8"));
  CHECK(d8.size() == 5);
  CHECK(d8.lattice_height() == 2);
}

TEST_CASE("abelian groups have the one-point lattice") {
  for (const char* name : {"C1", "C12", "E2^4", "E3^3"}) {
    const Group g = catalog_group(name);
    const CdLattice cd = cd_lattice(g);
    CHECK(cd.size() == 1);
    CHECK(cd[0].is_whole());
    CHECK(cd.max_measure() == g.order() * g.order());
    CHECK(cd.lattice_height() == 0);
    CHECK(cd.atoms().empty());
    CHECK(cd.hasse_edges().empty());
  }
}

TEST_CASE("the center floor gives the same lattice as filtering every subgroup") {
  for (const auto& name : standard_catalog(32)) {
    CAPTURE(name);
    const Group g = catalog_group(name);
    std::vector<ElementSet> all;
    for (const auto& h : all_subgroups(g)) all.push_back(h.elements());
    std::uint64_t best = 0;
    const auto want = oracle::cd_by_measure_filter(g, all, best);
    const CdLattice cd = cd_lattice(g);
    CHECK(cd.max_measure() == best);
    CHECK(members(cd) == want);
  }
}

TEST_CASE("lattice laws hold on every catalog lattice") {
  for (const auto& name : standard_catalog(32)) {
    CAPTURE(name);
    const Group g = catalog_group(name);
    const CdLattice cd = cd_lattice(g);
    const Subgroup z = center(g);
    for (std::size_t x = 0; x < cd.size(); ++x) {
      CHECK(z.is_subgroup_of(cd[x]));
      CHECK(measure(g, cd[x]) == cd.max_measure());
      CHECK(cd.height(x) + cd.depth(x) == cd.lattice_height());
      // Centralizer duality is an order-reversing involution.
      const std::size_t dx = cd.duality(x);
      CHECK(cd.duality(dx) == x);
      CHECK(cd.height(dx) == cd.depth(x));
      for (std::size_t y = 0; y < cd.size(); ++y) {
        const std::size_t j = cd.join(x, y);
        const std::size_t m = cd.meet(x, y);
        CHECK(cd[j].elements() == oracle::product(g, cd[x].elements(), cd[y].elements()));
        CHECK(cd[m].elements() == (cd[x].elements() & cd[y].elements()));
        // Modularity: heights of join and meet add up.
        CHECK(cd.height(j) + cd.height(m) == cd.height(x) + cd.height(y));
      }
    }
    for (const auto& [lo, hi] : cd.hasse_edges()) {
      CHECK(cd[lo].is_subgroup_of(cd[hi]));
      CHECK(cd.height(hi) == cd.height(lo) + 1);
    }
  }
}

TEST_CASE("CD lattices are isomorphism invariant") {
  std::mt19937_64 rng(5);
  for (const char* name : {"D8", "Q8", "X+27", "D12", "Q16", "S4"}) {
    const Group g = catalog_group(name);
    const CdLattice cd = cd_lattice(g);
    for (int trial = 0; trial < 3; ++trial) {
      const CdLattice other = cd_lattice(oracle::relabeled(g, rng));
      CHECK(other.size() == cd.size());
      CHECK(other.max_measure() == cd.max_measure());
      CHECK(other.lattice_height() == cd.lattice_height());
      CHECK(other.hasse_edges().size() == cd.hasse_edges().size());
    }
  }
}

TEST_CASE("node sets without a rank function are rejected") {
  const Group s4 = catalog_group("S4");
  const SubgroupSet all = all_subgroups(s4);
  // 1 < C2 < S3 < S4 beside 1 < A4 < S4: a top and bottom but no grading.
  std::vector<ElementSet> pick{all[0].elements(), all[all.size() - 1].elements()};
  const Subgroup* c2 = nullptr;
  for (const auto& h : all)
    if (h.order() == 2 && !c2) {
      // a transposition's subgroup lies in some S3
      for (const auto& k : all)
        if (k.order() == 6 && h.is_subgroup_of(k)) {
          c2 = &h;
          pick.push_back(h.elements());
          pick.push_back(k.elements());
          break;
        }
    }
  for (const auto& h : all)
    if (h.order() == 12) pick.push_back(h.elements());
  REQUIRE(pick.size() == 5);
  CHECK(error_code([&] { CdLattice::from_nodes(SubgroupSet(s4, pick), 1); }) == ErrorCode::GradednessViolation);

  std::vector<ElementSet> two_bottoms;
  for (const auto& h : all)
    if (h.order() == 3 && two_bottoms.size() < 2) two_bottoms.push_back(h.elements());
  two_bottoms.push_back(all[all.size() - 1].elements());
  CHECK(error_code([&] { CdLattice::from_nodes(SubgroupSet(s4, two_bottoms), 1); }) == ErrorCode::LatticeViolation);
}
