#include "cdlat/theorems.hpp"

#include <algorithm>
#include <unordered_set>

#include "closure_state.hpp"

namespace cdlat {

using nlohmann::json;

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    case Status::Error: return "error";
  }
  return "error";
}

std::optional<std::size_t> LiftedCd::index_of(const ElementSet& s) const {
  const auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

LiftedCd lift_cd(const Subgroup& h, const Limits& limits) {
  const InducedGroup local = induced_group(h);
  const CdLattice cd = cd_lattice(local.group, limits);
  LiftedCd out;
  out.max_measure = cd.max_measure();
  for (std::size_t i = 0; i < cd.size(); ++i) {
    out.nodes.push_back(local.lift(cd[i].elements()));
    out.height.push_back(cd.height(i));
    out.depth.push_back(cd.depth(i));
    out.index.emplace(out.nodes.back(), i);
  }
  out.lattice_height = cd.lattice_height();
  out.top = cd.top();
  out.bottom = cd.bottom();
  return out;
}

// ---------------------------------------------------------------------------
// GroupAnalysis

GroupAnalysis::GroupAnalysis(Group g, Limits limits) : group_(std::move(g)), limits_(limits) {}

const SubgroupSet& GroupAnalysis::subgroups() {
  if (!subgroups_) {
    subgroups_ = std::make_unique<SubgroupSet>(all_subgroups(group_, limits_));
    centralizers_.assign(subgroups_->size(), std::nullopt);
    generators_.assign(subgroups_->size(), std::nullopt);
  }
  return *subgroups_;
}

std::size_t GroupAnalysis::index_of(const ElementSet& h) {
  const auto idx = subgroups().index_of(h);
  if (!idx) throw Error(ErrorCode::LatticeViolation, "set of " + std::to_string(h.count()) + " elements is not a subgroup");
  return *idx;
}

const ElementSet& GroupAnalysis::centralizer_of(std::size_t i) {
  const auto& all = subgroups();
  if (!centralizers_[i]) centralizers_[i] = centralizer(group_, all[i]).elements();
  return *centralizers_[i];
}

const std::vector<Element>& GroupAnalysis::generators_of(std::size_t i) {
  const auto& all = subgroups();
  if (!generators_[i]) generators_[i] = cdlat::generators_of(all[i]);
  return *generators_[i];
}

std::size_t GroupAnalysis::join_of(std::size_t i, std::size_t j) {
  const auto& all = subgroups();
  if (all[j].elements().is_subset_of(all[i].elements())) return i;
  if (all[i].elements().is_subset_of(all[j].elements())) return j;
  detail::ClosureState st(group_, all[i], generators_of(i));
  for (Element x : generators_of(j)) st.add(x);
  return index_of(st.bits);
}

Measure GroupAnalysis::measure_of(std::size_t i) {
  return static_cast<Measure>(subgroups()[i].order()) * centralizer_of(i).count();
}

const ElementSet& GroupAnalysis::center() {
  if (!center_) center_ = cdlat::center(group_).elements();
  return *center_;
}

const CdLattice& GroupAnalysis::cd() {
  if (!cd_) cd_ = std::make_unique<CdLattice>(cd_lattice(group_, limits_));
  return *cd_;
}

const LiftedCd& GroupAnalysis::cd_of(const ElementSet& h) {
  auto it = sub_cd_.find(h);
  if (it == sub_cd_.end()) it = sub_cd_.emplace(h, lift_cd(Subgroup::from_elements(group_, h), limits_)).first;
  return it->second;
}

const std::vector<InternalDecomposition>& GroupAnalysis::decompositions() {
  if (!decompositions_) decompositions_ = internal_decompositions(subgroups());
  return *decompositions_;
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

json set_json(const ElementSet& s) { return s.elements(); }

class Recorder {
 public:
  Recorder(std::string statement, std::string input) : start_(Clock::now()) {
    report_.statement = std::move(statement);
    report_.input = std::move(input);
  }

  CheckReport fail(json witness) {
    report_.status = Status::Fail;
    report_.witness = std::move(witness);
    return finish();
  }
  CheckReport skip(std::string why) {
    report_.status = Status::Skip;
    report_.detail = std::move(why);
    return finish();
  }
  CheckReport pass(std::string detail = {}) {
    report_.status = Status::Pass;
    report_.detail = std::move(detail);
    return finish();
  }
  CheckReport& report() { return report_; }

 private:
  CheckReport finish() {
    report_.elapsed = Clock::now() - start_;
    return report_;
  }

  CheckReport report_;
  Clock::time_point start_;
};

std::string describe(const Group& g, const Subgroup& a, const Subgroup& b) {
  return g.name() + " (|A|=" + std::to_string(a.order()) + ", |B|=" + std::to_string(b.order()) + ")";
}

void require_decomposition(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (!is_central_decomposition(g, a, b))
    throw Error(ErrorCode::NotCentralDecomposition, g.name() + " is not the central product of the given subgroups");
}

bool is_closed(const Group& g, const ElementSet& s) {
  return s.test(0) && subgroup_closure(g, s).order() == s.count();
}

ElementSet image(const GroupHomomorphism& f, const ElementSet& s) {
  ElementSet out(f.target.group().order());
  s.for_each([&](Element x) { out.set(f(x)); });
  return out;
}

// Members of `have` not in `want` and vice versa, both in canonical order.
json first_difference(std::vector<ElementSet> have, std::vector<ElementSet> want) {
  std::sort(have.begin(), have.end(), canonical_less);
  std::sort(want.begin(), want.end(), canonical_less);
  std::vector<ElementSet> extra, missing;
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(extra), canonical_less);
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(missing),
                      canonical_less);
  json w = json::object();
  if (!extra.empty()) w["unexpected"] = set_json(extra.front());
  if (!missing.empty()) w["missing"] = set_json(missing.front());
  return w;
}

std::vector<ElementSet> dedup(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Z(P) for a subgroup P of G, computed inside G.
ElementSet center_of(const Group& g, const ElementSet& p) {
  return centralizer(g, Subgroup::from_trusted(g, p)).elements() & p;
}

bool strictly_between(const ElementSet& low, const ElementSet& x, const ElementSet& high) {
  return low.is_subset_of(x) && x.is_subset_of(high) && low.count() < x.count() && x.count() < high.count();
}

}  // namespace

// ---------------------------------------------------------------------------
// Decomposition checks

CheckReport check_prop_almost(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("prop-almost", describe(g, a, b));
  const ElementSet ab = a.elements() & b.elements();
  const LiftedCd& ca = ga.cd_of(a.elements());
  const LiftedCd& cb = ga.cd_of(b.elements());
  const CdLattice& cg = ga.cd();

  std::size_t found = 0;
  for (const Subgroup& u : cg.nodes()) {
    // U = HK with H ≤ A, K ≤ B exactly when U = (U∩A)(U∩B).
    const ElementSet h = u.elements() & a.elements();
    const ElementSet k = u.elements() & b.elements();
    if (product_set(g, h, k) != u.elements()) continue;
    if (found++ == 0) {
      const Measure lhs = cg.max_measure() * ab.count() * ab.count();
      const Measure rhs = ca.max_measure * cb.max_measure;
      if (lhs != rhs)
        return rec.fail({{"claim", "m*(G)|A∩B|^2 = m*(A)m*(B)"}, {"HK", set_json(u.elements())}, {"lhs", lhs}, {"rhs", rhs}});
      for (const auto& x : ca.nodes)
        for (const auto& y : cb.nodes)
          if (!cg.index_of(product_set(g, x, y)))
            return rec.fail({{"claim", "CD(A)CD(B) ⊆ CD(G)"}, {"HK", set_json(u.elements())}, {"X", set_json(x)},
                             {"Y", set_json(y)}});
    }
    const ElementSet hab = product_set(g, h, ab);
    if (!ca.contains(hab))
      return rec.fail({{"claim", "H(A∩B) ∈ CD(A)"}, {"HK", set_json(u.elements())}, {"H(A∩B)", set_json(hab)}});
    const ElementSet kab = product_set(g, k, ab);
    if (!cb.contains(kab))
      return rec.fail({{"claim", "K(A∩B) ∈ CD(B)"}, {"HK", set_json(u.elements())}, {"K(A∩B)", set_json(kab)}});
  }
  if (found == 0) return rec.skip("no member of CD(G) has the form HK");
  return rec.pass(std::to_string(found) + " product members");
}

CheckReport check_thm_central_product(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("thm-central-product", describe(g, a, b));
  const LiftedCd& ca = ga.cd_of(a.elements());
  const LiftedCd& cb = ga.cd_of(b.elements());
  const CdLattice& cg = ga.cd();

  std::unordered_set<ElementSet, ElementSetHash> products;
  for (const auto& x : ca.nodes)
    for (const auto& y : cb.nodes) {
      ElementSet p = product_set(g, x, y);
      if (!cg.index_of(p))
        return rec.fail({{"claim", "XY ∈ CD(G)"}, {"X", set_json(x)}, {"Y", set_json(y)}, {"XY", set_json(p)}});
      products.insert(std::move(p));
    }
  const ElementSet top = product_set(g, ca.nodes[ca.top], cb.nodes[cb.top]);
  if (top != cg[cg.top()].elements())
    return rec.fail({{"claim", "T_A T_B = T_G"}, {"TATB", set_json(top)}, {"TG", set_json(cg[cg.top()].elements())}});
  const ElementSet bottom = product_set(g, ca.nodes[ca.bottom], cb.nodes[cb.bottom]);
  if (bottom != cg[cg.bottom()].elements())
    return rec.fail(
        {{"claim", "B_A B_B = B_G"}, {"BABB", set_json(bottom)}, {"BG", set_json(cg[cg.bottom()].elements())}});
  rec.report().data = {{"products", products.size()}, {"members", cg.size()}};
  return rec.pass(std::to_string(products.size()) + " of " + std::to_string(cg.size()) + " members are products");
}

CheckReport check_corollary_mstar(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("cor-mstar", describe(g, a, b));
  const Measure inter = (a.elements() & b.elements()).count();
  const Measure mg = ga.cd().max_measure();
  const Measure ma = ga.cd_of(a.elements()).max_measure;
  const Measure mb = ga.cd_of(b.elements()).max_measure;
  if (mg * inter * inter != ma * mb)
    return rec.fail({{"mG", mg}, {"mA", ma}, {"mB", mb}, {"|A∩B|", inter}});
  return rec.pass(std::to_string(mg) + "·" + std::to_string(inter * inter) + " = " + std::to_string(ma) + "·" +
                  std::to_string(mb));
}

CheckReport check_thm_levels(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("thm-levels", describe(g, a, b));
  const ElementSet ab = a.elements() & b.elements();
  const LiftedCd& ca = ga.cd_of(a.elements());
  const LiftedCd& cb = ga.cd_of(b.elements());
  const CdLattice& cg = ga.cd();

  if (cg.lattice_height() != ca.lattice_height + cb.lattice_height)
    return rec.fail({{"claim", "height(CD(G)) = height(CD(A)) + height(CD(B))"},
                     {"G", cg.lattice_height()},
                     {"A", ca.lattice_height},
                     {"B", cb.lattice_height}});
  std::size_t products = 0;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    const ElementSet& u = cg[i].elements();
    if (!ab.is_subset_of(u)) continue;
    const ElementSet h = u & a.elements();
    const ElementSet k = u & b.elements();
    if (product_set(g, h, k) != u) continue;
    ++products;
    const auto ih = ca.index_of(h);
    const auto ik = cb.index_of(k);
    if (!ih || !ik)
      return rec.fail({{"claim", "H ∈ CD(A) and K ∈ CD(B)"}, {"H", set_json(h)}, {"K", set_json(k)}});
    if (cg.height(i) != ca.height[*ih] + cb.height[*ik])
      return rec.fail({{"claim", "height adds"},
                       {"H", set_json(h)},
                       {"K", set_json(k)},
                       {"HK", cg.height(i)},
                       {"inA", ca.height[*ih]},
                       {"inB", cb.height[*ik]}});
    if (cg.depth(i) != ca.depth[*ih] + cb.depth[*ik])
      return rec.fail({{"claim", "depth adds"},
                       {"H", set_json(h)},
                       {"K", set_json(k)},
                       {"HK", cg.depth(i)},
                       {"inA", ca.depth[*ih]},
                       {"inB", cb.depth[*ik]}});
  }
  return rec.pass(std::to_string(cg.lattice_height()) + " = " + std::to_string(ca.lattice_height) + " + " +
                  std::to_string(cb.lattice_height) + ", " + std::to_string(products) + " product members");
}

CheckReport check_lemma_prod(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("lemma-prod", describe(g, a, b));
  const ElementSet ab = a.elements() & b.elements();
  std::vector<const ElementSet*> hs, ks;
  for (const Subgroup& x : ga.subgroups()) {
    if (!ab.is_subset_of(x.elements())) continue;
    if (x.elements().is_subset_of(a.elements())) hs.push_back(&x.elements());
    if (x.elements().is_subset_of(b.elements())) ks.push_back(&x.elements());
  }
  struct Cell {
    std::size_t h, k;
    ElementSet product;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j) cells.push_back({i, j, product_set(g, *hs[i], *ks[j])});
  for (const Cell& c1 : cells)
    for (const Cell& c2 : cells) {
      if (c1.product.count() > c2.product.count() || !c1.product.is_subset_of(c2.product)) continue;
      const bool ok = hs[c1.h]->is_subset_of(*hs[c2.h]) && ks[c1.k]->is_subset_of(*ks[c2.k]);
      if (!ok)
        return rec.fail({{"claim", "H1K1 ⊆ H2K2 implies H1 ≤ H2 and K1 ≤ K2"},
                         {"H1", set_json(*hs[c1.h])},
                         {"K1", set_json(*ks[c1.k])},
                         {"H2", set_json(*hs[c2.h])},
                         {"K2", set_json(*ks[c2.k])}});
    }
  return rec.pass(std::to_string(cells.size()) + " products");
}

CheckReport check_lemma_pi_is_subgroup(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("lemma-pi-is-subgroup", describe(g, a, b));
  const ElementSet ab = a.elements() & b.elements();
  for (const Subgroup& u : ga.subgroups()) {
    for (Side side : {Side::A, Side::B}) {
      const ElementSet& factor = side == Side::A ? a.elements() : b.elements();
      const ElementSet p = pi_projection_set(g, a.elements(), b.elements(), u.elements(), side);
      if (!is_closed(g, p) || !ab.is_subset_of(p) || !p.is_subset_of(factor))
        return rec.fail({{"claim", "A∩B ≤ π(U) ≤ factor"},
                         {"side", side == Side::A ? "A" : "B"},
                         {"U", set_json(u.elements())},
                         {"pi", set_json(p)}});
    }
  }
  return rec.pass(std::to_string(ga.subgroups().size()) + " subgroups");
}

CheckReport check_lemma_pi(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  require_decomposition(g, a, b);
  Recorder rec("lemma-pi", describe(g, a, b));
  const ElementSet ab = a.elements() & b.elements();
  const auto& all = ga.subgroups();
  std::size_t instances = 0;
  for (const Subgroup& k : all) {
    if (!k.elements().is_subset_of(b.elements())) continue;
    const ElementSet floor = ab | k.elements();
    const ElementSet ak = product_set(g, a.elements(), k.elements());
    for (const Subgroup& u : all) {
      if (!floor.is_subset_of(u.elements()) || !u.elements().is_subset_of(ak)) continue;
      ++instances;
      const ElementSet pa = pi_projection_set(g, a.elements(), b.elements(), u.elements(), Side::A);
      if (product_set(g, pa, k.elements()) != u.elements())
        return rec.fail({{"claim", "U = π_A(U)K"}, {"K", set_json(k.elements())}, {"U", set_json(u.elements())},
                         {"pi", set_json(pa)}});
    }
  }
  return rec.pass(std::to_string(instances) + " (K, U) pairs");
}

CheckReport check_prop_nonproper(GroupAnalysis& ga, const Subgroup& a, const Subgroup& b) {
  const Group& g = ga.group();
  Recorder rec("prop-nonproper", describe(g, a, b));
  if (product_set(g, a.elements(), b.elements()).count() != g.order()) return rec.skip("G ≠ AB");
  if (!b.elements().is_subset_of(ga.center())) return rec.skip("B is not central");
  std::vector<ElementSet> expected;
  for (const auto& x : ga.cd_of(a.elements()).nodes) expected.push_back(product_set(g, x, b.elements()));
  expected = dedup(std::move(expected));
  std::vector<ElementSet> have;
  for (const Subgroup& u : ga.cd().nodes()) have.push_back(u.elements());
  if (have != expected) return rec.fail(first_difference(have, expected));
  return rec.pass(std::to_string(have.size()) + " members");
}

// ---------------------------------------------------------------------------
// Whole-group checks

CheckReport check_lemma_iss(GroupAnalysis& ga) {
  const Group& g = ga.group();
  Recorder rec("lemma-iss", g.name());
  const auto& all = ga.subgroups();
  const std::size_t s = all.size();
  std::size_t equalities = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const ElementSet& h = all[i].elements();
      const ElementSet& k = all[j].elements();
      const std::size_t join = ga.join_of(i, j);
      const std::size_t meet = ga.index_of(h & k);
      const Measure lhs = ga.measure_of(i) * ga.measure_of(j);
      const Measure rhs = ga.measure_of(join) * ga.measure_of(meet);
      auto witness = [&](const char* claim) {
        return json{{"claim", claim}, {"H", set_json(h)}, {"K", set_json(k)}, {"lhs", lhs}, {"rhs", rhs}};
      };
      if (lhs > rhs) return rec.fail(witness("m(H)m(K) ≤ m(<H,K>)m(H∩K)"));
      const bool join_is_product = product_set(g, h, k).count() == all[join].order();
      const bool centralizers_split =
          product_set(g, ga.centralizer_of(i), ga.centralizer_of(j)) == ga.centralizer_of(meet);
      if ((lhs == rhs) != (join_is_product && centralizers_split))
        return rec.fail(witness("equality iff <H,K> = HK and C(H∩K) = C(H)C(K)"));
      equalities += lhs == rhs;
    }
  return rec.pass(std::to_string(s * (s + 1) / 2) + " unordered pairs, " + std::to_string(equalities) +
                  " with equality");
}

CheckReport check_lemma_an1(GroupAnalysis& ga) {
  const Group& g = ga.group();
  Recorder rec("lemma-an1", g.name());
  const auto& all = ga.subgroups();
  const std::size_t s = all.size();
  // below[i]: indices j with L[j] ≤ L[i]; canonical order puts them first.
  std::vector<std::vector<std::size_t>> below(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (all[j].elements().is_subset_of(all[i].elements())) below[i].push_back(j);

  std::size_t chains = 0;
  for (std::size_t hi = 0; hi < s; ++hi) {
    const ElementSet& h = all[hi].elements();
    for (std::size_t xi : below[hi]) {
      const ElementSet& cx = ga.centralizer_of(xi);
      const ElementSet hcx = product_set(g, h, cx);
      const Measure mhx = all[xi].order() * (h & cx).count();
      const Measure mgx = ga.measure_of(xi);
      for (std::size_t ki : below[xi]) {
        ++chains;
        const ElementSet& ck = ga.centralizer_of(ki);
        const Measure mhk = all[ki].order() * (h & ck).count();
        const Measure mgk = ga.measure_of(ki);
        const Measure lhs = mhk * mgx;
        const Measure rhs = mhx * mgk;
        auto witness = [&](const char* claim) {
          return json{{"claim", claim},
                      {"K", set_json(all[ki].elements())},
                      {"X", set_json(all[xi].elements())},
                      {"H", set_json(h)},
                      {"lhs", lhs},
                      {"rhs", rhs}};
        };
        if (lhs > rhs) return rec.fail(witness("m_H(K)/m_G(K) ≤ m_H(X)/m_G(X)"));
        if ((lhs == rhs) != ck.is_subset_of(hcx)) return rec.fail(witness("equality iff C(K) ⊆ H·C(X)"));
      }
    }
  }
  return rec.pass(std::to_string(chains) + " chains");
}

CheckReport check_lemma_an2(GroupAnalysis& ga, const Subgroup& h, const Subgroup& x) {
  const Group& g = ga.group();
  require_same_parent(g, h, "lemma an2");
  require_same_parent(g, x, "lemma an2");
  Recorder rec("lemma-an2", g.name() + " (|H|=" + std::to_string(h.order()) + ", |X|=" + std::to_string(x.order()) + ")");
  if (!x.elements().is_subset_of(h.elements())) return rec.skip("X is not contained in H");
  const std::size_t xi = ga.index_of(x.elements());
  const ElementSet& cx = ga.centralizer_of(xi);
  if (product_set(g, h.elements(), cx).count() != g.order()) return rec.skip("G ≠ H·C_G(X)");
  const LiftedCd& ch = ga.cd_of(h.elements());
  if (!ch.contains(x.elements())) return rec.skip("X ∉ CD(H)");

  const CdLattice& cg = ga.cd();
  for (std::size_t yi = 0; yi < cg.size(); ++yi) {
    const ElementSet& y = cg[yi].elements();
    const std::size_t yl = ga.index_of(y);
    const std::size_t join = ga.join_of(xi, yl);
    const ElementSet& j = ga.subgroups()[join].elements();
    const ElementSet meet = x.elements() & y;
    auto witness = [&](const char* claim) { return json{{"claim", claim}, {"Y", set_json(y)}}; };
    if (!cg.index_of(j)) return rec.fail(witness("<X,Y> ∈ CD(G)"));
    if (!ch.contains(meet)) return rec.fail(witness("X∩Y ∈ CD(H)"));
    if (product_set(g, x.elements(), y) != j) return rec.fail(witness("<X,Y> = XY"));
    if (product_set(g, cx, ga.centralizer_of(yl)) != ga.centralizer_of(ga.index_of(meet)))
      return rec.fail(witness("C(X∩Y) = C(X)C(Y)"));
  }
  return rec.pass(std::to_string(cg.size()) + " members Y");
}

CheckReport check_cor_g_in_cd(GroupAnalysis& ga) {
  const Group& g = ga.group();
  Recorder rec("cor-g-in-cd", g.name());
  const bool g_in = ga.cd()[ga.cd().top()].is_whole();
  for (const auto& d : ga.decompositions()) {
    const bool a_in = ga.cd_of(d.a.elements()).contains(d.a.elements());
    const bool b_in = ga.cd_of(d.b.elements()).contains(d.b.elements());
    if (g_in != (a_in && b_in))
      return rec.fail({{"A", set_json(d.a.elements())},
                       {"B", set_json(d.b.elements())},
                       {"GinCD", g_in},
                       {"AinCD", a_in},
                       {"BinCD", b_in}});
  }
  return rec.pass(std::to_string(ga.decompositions().size()) + " decompositions, G " +
                  (g_in ? "in" : "not in") + " CD(G)");
}

std::vector<CheckReport> check_structure_props(GroupAnalysis& ga) {
  const Group& g = ga.group();
  const CdLattice& cg = ga.cd();
  const ElementSet& z = ga.center();
  const bool g_in = cg[cg.top()].is_whole();
  const std::size_t height = cg.lattice_height();

  std::optional<InternalDecomposition> proper;
  for (const auto& d : ga.decompositions())
    if (d.proper) {
      proper = d;
      break;
    }
  std::vector<std::size_t> atoms = cg.atoms();
  std::optional<std::size_t> nonabelian_atom;
  for (std::size_t i : atoms)
    if (!cg[i].is_abelian()) {
      nonabelian_atom = i;
      break;
    }
  auto proper_json = [&] {
    return json{{"A", set_json(proper->a.elements())}, {"B", set_json(proper->b.elements())}};
  };

  std::vector<CheckReport> out;
  {
    Recorder rec("prop-small-cd-lattice", g.name());
    std::vector<ElementSet> members;
    for (const Subgroup& u : cg.nodes()) members.push_back(u.elements());
    const auto small = dedup({z, ElementSet::full(g.order())});
    if (members != small)
      out.push_back(rec.skip("CD(G) ≠ {Z(G), G}"));
    else if (proper)
      out.push_back(rec.fail(proper_json()));
    else
      out.push_back(rec.pass("no proper decomposition"));
  }
  {
    Recorder rec("lemma-nonabelian-atom", g.name());
    if (!g_in || height <= 1)
      out.push_back(rec.skip("needs G ∈ CD(G) and height > 1"));
    else if (!nonabelian_atom)
      out.push_back(rec.skip("no nonabelian atom"));
    else {
      std::optional<CheckReport> bad;
      for (std::size_t i : atoms) {
        if (cg[i].is_abelian()) continue;
        const Subgroup c = centralizer(g, cg[i]);
        if (!is_central_decomposition(g, cg[i], c) || !is_proper_decomposition(g, cg[i], c)) {
          bad = rec.fail({{"atom", set_json(cg[i].elements())}, {"centralizer", set_json(c.elements())}});
          break;
        }
      }
      out.push_back(bad ? *bad : rec.pass("every nonabelian atom splits G properly"));
    }
  }
  {
    Recorder rec("lemma-abel-atoms", g.name());
    if (!g_in || height <= 1)
      out.push_back(rec.skip("needs G ∈ CD(G) and height > 1"));
    else if (proper)
      out.push_back(rec.skip("G has a proper decomposition"));
    else if (nonabelian_atom)
      out.push_back(rec.fail({{"atom", set_json(cg[*nonabelian_atom].elements())}}));
    else
      out.push_back(rec.pass(std::to_string(atoms.size()) + " abelian atoms"));
  }
  {
    Recorder rec("lemma-coatom", g.name());
    if (!g_in || height <= 1)
      out.push_back(rec.skip("needs G ∈ CD(G) and height > 1"));
    else {
      std::optional<CheckReport> bad;
      std::size_t split = 0;
      for (std::size_t i : cg.coatoms()) {
        const ElementSet& c = cg[i].elements();
        const ElementSet cc = centralizer(g, cg[i]).elements();
        if (cc == (c & cc)) continue;  // C_G(C) = Z(C)
        // Otherwise P = C·C_G(C) must be a proper central product inside itself.
        const ElementSet p = product_set(g, c, cc);
        const ElementSet zp = center_of(g, p);
        if (!strictly_between(zp, c, p) || !strictly_between(zp, cc, p)) {
          bad = rec.fail({{"coatom", set_json(c)}, {"centralizer", set_json(cc)}});
          break;
        }
        ++split;
      }
      out.push_back(bad ? *bad
                        : rec.pass(std::to_string(cg.coatoms().size()) + " coatoms, " + std::to_string(split) +
                                   " split properly"));
    }
  }
  {
    Recorder rec("prop-heights-2-3", g.name());
    if (!g_in || (height != 2 && height != 3))
      out.push_back(rec.skip("needs G ∈ CD(G) and height 2 or 3"));
    else if (proper.has_value() == !nonabelian_atom.has_value()) {
      json w{{"properDecomposition", proper.has_value()}, {"abelianAtoms", !nonabelian_atom.has_value()}};
      if (proper) w["decomposition"] = proper_json();
      out.push_back(rec.fail(std::move(w)));
    } else
      out.push_back(rec.pass(proper ? "proper decomposition and a nonabelian atom"
                                    : "no proper decomposition, all atoms abelian"));
  }
  return out;
}

std::vector<CheckReport> check_interval_results(GroupAnalysis& ga) {
  const Group& g = ga.group();
  const CdLattice& cg = ga.cd();
  std::vector<CheckReport> out;

  auto interval_in_cd = [&](const ElementSet& low, const ElementSet& high) {
    std::vector<ElementSet> v;
    for (const Subgroup& u : cg.nodes())
      if (low.is_subset_of(u.elements()) && u.elements().is_subset_of(high)) v.push_back(u.elements());
    return v;
  };

  {
    Recorder rec("lemma-interval-of-product", g.name());
    std::optional<CheckReport> bad;
    for (const Subgroup& h : cg.nodes()) {
      const ElementSet c = ga.centralizer_of(ga.index_of(h.elements()));
      const ElementSet p = product_set(g, h.elements(), c);
      const ElementSet zh = h.elements() & c;
      const auto& lifted = ga.cd_of(p).nodes;
      const auto want = interval_in_cd(zh, p);
      if (lifted != want) {
        json w = first_difference(lifted, want);
        w["H"] = set_json(h.elements());
        bad = rec.fail(std::move(w));
        break;
      }
    }
    out.push_back(bad ? *bad : rec.pass(std::to_string(cg.size()) + " members H"));
  }
  {
    Recorder rec("cor-subgroups-in-cd", g.name());
    std::optional<CheckReport> bad;
    for (const Subgroup& h : cg.nodes()) {
      const ElementSet zh = h.elements() & ga.centralizer_of(ga.index_of(h.elements()));
      const auto& lifted = ga.cd_of(h.elements()).nodes;
      const auto want = interval_in_cd(zh, h.elements());
      if (lifted != want) {
        json w = first_difference(lifted, want);
        w["H"] = set_json(h.elements());
        bad = rec.fail(std::move(w));
        break;
      }
    }
    out.push_back(bad ? *bad : rec.pass(std::to_string(cg.size()) + " members H"));
  }
  {
    Recorder rec("cor-full-transitive", g.name());
    const auto& all = ga.subgroups();
    std::size_t above_center = 0;
    for (const Subgroup& x : all) above_center += ga.center().is_subset_of(x.elements());
    if (above_center != cg.size()) {
      out.push_back(rec.skip("CD(G) ≠ [Z(G):G]"));
    } else {
      std::optional<CheckReport> bad;
      for (std::size_t i = 0; i < all.size() && !bad; ++i) {
        const ElementSet& h = all[i].elements();
        const ElementSet zh = h & ga.centralizer_of(i);
        std::vector<ElementSet> want;
        for (const Subgroup& x : all)
          if (zh.is_subset_of(x.elements()) && x.elements().is_subset_of(h)) want.push_back(x.elements());
        const auto& lifted = ga.cd_of(h).nodes;
        if (lifted != want) {
          json w = first_difference(lifted, want);
          w["H"] = set_json(h);
          bad = rec.fail(std::move(w));
        }
      }
      out.push_back(bad ? *bad : rec.pass(std::to_string(all.size()) + " subgroups H"));
    }
  }
  return out;
}

CheckReport check_prop_direct(const Group& a, const Group& b, const Limits& limits) {
  Recorder rec("prop-direct", a.name() + "x" + b.name());
  const ProductGroup pg = direct_product(a, b, limits);
  const CdLattice ca = cd_lattice(a, limits);
  const CdLattice cb = cd_lattice(b, limits);
  const CdLattice cg = cd_lattice(pg.group, limits);
  std::vector<ElementSet> expected;
  for (const Subgroup& x : ca.nodes())
    for (const Subgroup& y : cb.nodes())
      expected.push_back(
          product_set(pg.group, image(pg.embed_a, x.elements()), image(pg.embed_b, y.elements())));
  expected = dedup(std::move(expected));
  std::vector<ElementSet> have;
  for (const Subgroup& u : cg.nodes()) have.push_back(u.elements());
  if (have != expected) return rec.fail(first_difference(have, expected));
  return rec.pass(std::to_string(have.size()) + " members");
}

CheckReport check_lemma_iss(const Group& g, const Limits& limits) {
  GroupAnalysis ga(g, limits);
  return check_lemma_iss(ga);
}

CheckReport check_lemma_an1(const Group& g, const Limits& limits) {
  GroupAnalysis ga(g, limits);
  return check_lemma_an1(ga);
}

CheckReport check_thm_central_product(const Group& g, const Subgroup& a, const Subgroup& b, const Limits& limits) {
  GroupAnalysis ga(g, limits);
  return check_thm_central_product(ga, a, b);
}

}  // namespace cdlat
