#include <doctest.h>

#include <map>

#include "cdlat/catalog.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cdlat;

namespace {

std::map<std::size_t, std::size_t> order_histogram(const Group& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

}  // namespace

TEST_CASE("every catalog group up to order 64 satisfies the axioms") {
  for (const auto& name : standard_catalog(64)) {
    CAPTURE(name);
    const Group g = catalog_group(name);
    CHECK(g.name() == name);
    CHECK(oracle::group_axiom_violation(g).empty());
  }
}

TEST_CASE("catalog orders and commutativity") {
  const std::map<std::string, std::pair<std::size_t, bool>> expected = {
      {"C1", {1, true}},    {"C12", {12, true}}, {"D8", {8, false}},   {"Q8", {8, false}},
      {"E2^3", {8, true}},  {"S3", {6, false}},  {"D6", {6, false}},   {"A4", {12, false}},
      {"S4", {24, false}},  {"A5", {60, false}}, {"S5", {120, false}}, {"Q16", {16, false}},
      {"X+27", {27, false}}, {"X-27", {27, false}}, {"E3^3", {27, true}}, {"D36", {36, false}},
  };
  for (const auto& [name, want] : expected) {
    CAPTURE(name);
    const Group g = catalog_group(name);
    CHECK(g.order() == want.first);
    CHECK(g.is_abelian() == want.second);
  }
}

TEST_CASE("element-order statistics tell look-alikes apart") {
  CHECK(order_histogram(catalog_group("D8")) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(order_histogram(catalog_group("Q8")) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_histogram(catalog_group("X+8")) == order_histogram(catalog_group("D8")));
  CHECK(order_histogram(catalog_group("X-8")) == order_histogram(catalog_group("Q8")));
  CHECK(order_histogram(catalog_group("X+27")) == std::map<std::size_t, std::size_t>{{1, 1}, {3, 26}});
  CHECK(order_histogram(catalog_group("X-27")).count(9) == 1);
  CHECK(order_histogram(catalog_group("A5")) ==
        std::map<std::size_t, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("quaternion labels") {
  const Group q8 = catalog_group("Q8");
  const Element i = element(q8, "i"), j = element(q8, "j"), k = element(q8, "k"), m = element(q8, "-1");
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, i) == element(q8, "-k"));
  CHECK(q8.mul(i, i) == m);
  CHECK(q8.mul(m, m) == 0);
}

TEST_CASE("catalog names") {
  CHECK(is_catalog_name("Q8"));
  CHECK(is_catalog_name("D2048"));
  CHECK(is_catalog_name("E2^4"));
  CHECK_FALSE(is_catalog_name("Q12"));
  CHECK_FALSE(is_catalog_name("D7"));
  CHECK_FALSE(is_catalog_name("S9"));
  CHECK_FALSE(is_catalog_name("Z4"));
  CHECK_FALSE(is_catalog_name(""));
  CHECK(error_code([] { catalog_group("nope"); }) == ErrorCode::UnknownCatalogName);
  Limits small;
  small.order_cap = 100;
  CHECK(error_code([&] { catalog_group("S5", small); }) == ErrorCode::OrderCapExceeded);
}

TEST_CASE("standard catalog is sorted by order and filtered") {
  const auto names = standard_catalog(16);
  CHECK(names.front() == "C1");
  std::size_t last = 0;
  for (const auto& name : names) {
    const std::size_t n = catalog_group(name).order();
    CHECK(n <= 16);
    CHECK(n >= last);
    last = n;
  }
  CHECK(standard_catalog(0).empty());
}
