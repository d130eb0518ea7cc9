#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdlat/catalog.hpp"
#include "cdlat/theorems.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cdlat;

namespace {

CentralProductResult q8q8() {
  const Group q8 = catalog_group("Q8");
  const Element m = element(q8, "-1");
  const std::vector<Element> us{m};
  const std::vector<std::pair<Element, Element>> phi{{m, m}};
  return central_product(make_central_product_spec(q8, q8, us, us, phi));
}

}  // namespace

TEST_CASE("every decomposition check passes on Q8*Q8") {
  const auto r = q8q8();
  GroupAnalysis ga(r.group);
  const Subgroup a = r.embed_a.image();
  const Subgroup b = r.embed_b.image();
  for (auto check : {check_prop_almost, check_thm_central_product, check_corollary_mstar, check_thm_levels,
                     check_lemma_prod, check_lemma_pi_is_subgroup, check_lemma_pi}) {
    const CheckReport rep = check(ga, a, b);
    CAPTURE(rep.statement);
    CAPTURE(rep.witness.dump());
    CHECK(rep.passed());
  }
  CHECK(ga.cd().max_measure() == 16 * 16 / 4);
  const CheckReport main = check_thm_central_product(ga, a, b);
  // CD(Q8) has five members; 5·5 products collapse since both contain -1.
  CHECK(main.data.at("members").get<std::size_t>() == ga.cd().size());
  CHECK(main.data.at("products").get<std::size_t>() <= 25);
}

TEST_CASE("Q8*Q8: height four, abelian atoms of order four") {
  const auto r = q8q8();
  GroupAnalysis ga(r.group);
  const CdLattice& cd = ga.cd();
  CHECK(cd.lattice_height() == 4);
  CHECK(cd[cd.top()].is_whole());
  CHECK(cd[cd.bottom()].order() == 2);
  const auto atoms = cd.atoms();
  CHECK_FALSE(atoms.empty());
  for (std::size_t x : atoms) {
    CHECK(cd[x].order() == 4);
    CHECK(cd[x].is_abelian());
  }
  const auto& ds = ga.decompositions();
  CHECK(std::any_of(ds.begin(), ds.end(), [](const auto& d) { return d.proper; }));
}

TEST_CASE("the central product theorem over every decomposition of the matrix") {
  for (const auto& input : product_matrix()) {
    if (input.group.order() > 32) continue;
    CAPTURE(input.name);
    GroupAnalysis ga(input.group);
    const CdLattice& cd = ga.cd();
    for (const auto& d : ga.decompositions()) {
      const CheckReport rep = check_thm_central_product(ga, d.a, d.b);
      CAPTURE(rep.witness.dump());
      CHECK(rep.passed());
      // CD(A)·CD(B) ⊆ CD(G) with tops and bottoms, recomputed here by hand.
      const LiftedCd& ca = ga.cd_of(d.a.elements());
      const LiftedCd& cb = ga.cd_of(d.b.elements());
      for (const auto& x : ca.nodes)
        for (const auto& y : cb.nodes) CHECK(cd.index_of(oracle::product(input.group, x, y)).has_value());
      CHECK(oracle::product(input.group, ca.nodes[ca.top], cb.nodes[cb.top]) == cd[cd.top()].elements());
      CHECK(oracle::product(input.group, ca.nodes[ca.bottom], cb.nodes[cb.bottom]) == cd[cd.bottom()].elements());
    }
  }
}

TEST_CASE("m* is multiplicative over a central product") {
  for (const auto& input : product_matrix()) {
    CAPTURE(input.name);
    GroupAnalysis ga(input.group);
    for (const auto& d : ga.decompositions()) {
      if (!d.proper) continue;
      const Measure ab = (d.a.elements() & d.b.elements()).count();
      const Measure ma = ga.cd_of(d.a.elements()).max_measure;
      const Measure mb = ga.cd_of(d.b.elements()).max_measure;
      CHECK(ga.cd().max_measure() * ab * ab == ma * mb);
      CHECK(check_corollary_mstar(ga, d.a, d.b).passed());
    }
  }
}

TEST_CASE("direct products: CD(A × B) = CD(A) × CD(B)") {
  const Group q8 = catalog_group("Q8");
  const Group c2 = catalog_group("C2");
  const CheckReport small = check_prop_direct(q8, c2);
  CAPTURE(small.witness.dump());
  CHECK(small.passed());
  const CheckReport big = check_prop_direct(q8, q8);
  CAPTURE(big.witness.dump());
  CHECK(big.passed());
  CHECK(cd_lattice(direct_product(q8, q8).group).size() == 25);
  CHECK(check_prop_direct(catalog_group("C1"), catalog_group("S3")).passed());
}

TEST_CASE("a central factor adds nothing") {
  // Q8∘C4 = Q8·C4 with C4 central.
  GroupAnalysis ga(product_matrix()[2].group);
  REQUIRE(ga.group().name() == "Q8*C4");
  std::size_t ran = 0;
  for (const auto& d : ga.decompositions()) {
    for (const auto& [a, b] : {std::pair{d.a, d.b}, std::pair{d.b, d.a}}) {
      const CheckReport rep = check_prop_nonproper(ga, a, b);
      CAPTURE(rep.witness.dump());
      CHECK(rep.status != Status::Fail);
      if (rep.passed()) ++ran;
    }
  }
  CHECK(ran > 0);
}

TEST_CASE("whole-group lemmas on small groups") {
  for (const char* name : {"Q8", "D8", "S3", "S4", "A4", "D12", "C6"}) {
    CAPTURE(name);
    GroupAnalysis ga(catalog_group(name));
    const CheckReport iss = check_lemma_iss(ga);
    CAPTURE(iss.witness.dump());
    CHECK(iss.passed());
    const CheckReport an1 = check_lemma_an1(ga);
    CAPTURE(an1.witness.dump());
    CHECK(an1.passed());
    CHECK(check_cor_g_in_cd(ga).status != Status::Fail);
    for (const auto& r : check_structure_props(ga)) {
      CAPTURE(r.statement);
      CHECK(r.status != Status::Fail);
      CHECK(r.status != Status::Error);
    }
    for (const auto& r : check_interval_results(ga)) {
      CAPTURE(r.statement);
      CHECK(r.status != Status::Fail);
    }
  }
}

TEST_CASE("small CD lattice proposition on S4") {
  GroupAnalysis ga(catalog_group("S4"));
  const auto reports = check_structure_props(ga);
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const CheckReport& r) { return r.statement == "prop-small-cd-lattice"; });
  REQUIRE(it != reports.end());
  CHECK(it->passed());
}

TEST_CASE("the anchored lemma on D8 × C2") {
  const Group g = direct_product(catalog_group("D8"), catalog_group("C2")).group;
  GroupAnalysis ga(g);
  const Subgroup whole = Subgroup::whole(g);
  std::size_t passed = 0;
  for (const auto& x : ga.cd().nodes()) {
    const CheckReport rep = check_lemma_an2(ga, whole, x);
    CAPTURE(rep.witness.dump());
    CHECK(rep.status != Status::Fail);
    passed += rep.passed();
  }
  CHECK(passed == ga.cd().size());
  // A precondition that fails is a skip, not a failure.
  const Subgroup t = Subgroup::trivial(g);
  CHECK(check_lemma_an2(ga, t, whole).status == Status::Skip);
}

TEST_CASE("checks reject pairs that are not central decompositions") {
  const Group s3 = catalog_group("S3");
  GroupAnalysis ga(s3);
  const SubgroupSet& all = ga.subgroups();
  const Subgroup& c2 = all[1];
  const Subgroup& c3 = all[all.size() - 2];
  CHECK(error_code([&] { check_thm_central_product(ga, c3, c2); }) == ErrorCode::NotCentralDecomposition);
}

TEST_CASE("suite output is sorted, filtered and repeatable") {
  const auto inputs = standard_inputs(8);
  const auto reports = run_suite(inputs);
  CHECK_FALSE(reports.empty());
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
    return std::tie(x.statement, x.input) < std::tie(y.statement, y.input);
  }));
  for (const auto& r : reports) {
    CAPTURE(r.statement);
    CAPTURE(r.input);
    CHECK(r.status != Status::Fail);
    CHECK(r.status != Status::Error);
  }
  const auto all_ids = statement_ids();
  const std::set<std::string> ids(all_ids.begin(), all_ids.end());
  for (const auto& r : reports) CHECK(ids.count(r.statement) == 1);

  const auto again = run_suite(inputs);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(again[i].statement == reports[i].statement);
    CHECK(again[i].input == reports[i].input);
    CHECK(again[i].status == reports[i].status);
    CHECK(again[i].witness == reports[i].witness);
  }

  SuiteOptions only;
  only.only = {"lemma-iss"};
  const auto filtered = run_suite(inputs, only);
  CHECK(filtered.size() == inputs.size());
  for (const auto& r : filtered) CHECK(r.statement == "lemma-iss");

  CHECK(run_suite({}).empty());
}

TEST_CASE("errors are captured per report") {
  SuiteOptions tight;
  tight.only = {"lemma-iss"};
  tight.limits.enumeration_budget = 3;
  const auto reports = run_suite(standard_inputs(8), tight);
  REQUIRE_FALSE(reports.empty());
  bool saw_error = false;
  for (const auto& r : reports) {
    if (r.status != Status::Error) continue;
    saw_error = true;
    CHECK(r.witness.contains("error"));
  }
  CHECK(saw_error);
}

TEST_CASE("statement ids are sorted and complete") {
  const auto ids = statement_ids();
  CHECK(ids.size() == 21);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::find(ids.begin(), ids.end(), "thm-central-product") != ids.end());
}
