#include <algorithm>
#include <functional>

#include "cdlat/catalog.hpp"
#include "cdlat/theorems.hpp"

namespace cdlat {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kStatements = {
    "cor-full-transitive",    "cor-g-in-cd",          "cor-mstar",           "cor-subgroups-in-cd",
    "lemma-abel-atoms",       "lemma-an1",            "lemma-an2",           "lemma-coatom",
    "lemma-interval-of-product", "lemma-iss",         "lemma-nonabelian-atom", "lemma-pi",
    "lemma-pi-is-subgroup",   "lemma-prod",           "prop-almost",         "prop-direct",
    "prop-heights-2-3",       "prop-nonproper",       "prop-small-cd-lattice", "thm-central-product",
    "thm-levels",
};

// The unique element of order 2 in Z(g).
Element central_involution(const Group& g) {
  std::optional<Element> found;
  center(g).elements().for_each([&](Element x) {
    if (g.element_order(x) == 2) {
      if (found) throw Error(ErrorCode::InvalidInput, g.name() + " has more than one central involution");
      found = x;
    }
  });
  if (!found) throw Error(ErrorCode::InvalidInput, g.name() + " has no central involution");
  return *found;
}

SuiteInput amalgamate_involutions(const Group& a, const Group& b, const Limits& limits) {
  const Element u = central_involution(a);
  const Element v = central_involution(b);
  const std::vector<Element> us{u}, vs{v};
  const std::vector<std::pair<Element, Element>> phi{{u, v}};
  auto result = central_product(make_central_product_spec(a, b, us, vs, phi), {}, limits);
  return {result.group.name(), result.group, std::nullopt};
}

SuiteInput direct(const Group& a, const Group& b, const Limits& limits) {
  auto p = direct_product(a, b, limits);
  return {p.group.name(), p.group, std::make_pair(a, b)};
}

CheckReport error_report(const std::string& statement, const std::string& input, const std::exception& e) {
  CheckReport r;
  r.statement = statement;
  r.input = input;
  r.status = Status::Error;
  r.witness = {{"error", e.what()}};
  return r;
}

// Folds per-decomposition reports into one: the first failure (in the order
// decompositions are listed) wins; all-skipped is a skip.
struct Fold {
  std::string statement;
  std::string input;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<CheckReport> failure;
  Clock::time_point start = Clock::now();

  void add(const CheckReport& r, const Subgroup& a, const Subgroup& b) {
    if (failure) return;
    if (r.status == Status::Skip) {
      ++skipped;
      return;
    }
    ++checked;
    if (r.status == Status::Fail || r.status == Status::Error) {
      failure = r;
      failure->witness = {{"A", a.elements().elements()}, {"B", b.elements().elements()}, {"detail", r.witness}};
    }
  }

  CheckReport finish(std::string extra = {}) const {
    CheckReport r;
    if (failure) r = *failure;
    r.statement = statement;
    r.input = input;
    if (!failure) r.status = checked == 0 ? Status::Skip : Status::Pass;
    r.detail = std::to_string(checked) + " checked, " + std::to_string(skipped) + " skipped" + extra;
    r.elapsed = Clock::now() - start;
    return r;
  }
};

// One input's reports for the selected statements.
class InputRun {
 public:
  InputRun(const SuiteInput& input, const SuiteOptions& options, std::vector<CheckReport>& out)
      : input_(input), options_(options), out_(out), ga_(input.group, options.limits) {}

  bool selected(const std::string& id) const {
    return options_.only.empty() || std::find(options_.only.begin(), options_.only.end(), id) != options_.only.end();
  }

  void single(const std::string& id, const std::function<CheckReport()>& f) {
    if (!selected(id)) return;
    try {
      CheckReport r = f();
      r.input = input_.name;
      out_.push_back(std::move(r));
    } catch (const std::exception& e) {
      out_.push_back(error_report(id, input_.name, e));
    }
  }

  void several(const std::vector<std::string>& ids, const std::function<std::vector<CheckReport>()>& f) {
    if (std::none_of(ids.begin(), ids.end(), [&](const auto& id) { return selected(id); })) return;
    try {
      for (CheckReport& r : f())
        if (selected(r.statement)) {
          r.input = input_.name;
          out_.push_back(std::move(r));
        }
    } catch (const std::exception& e) {
      for (const auto& id : ids)
        if (selected(id)) out_.push_back(error_report(id, input_.name, e));
    }
  }

  using PerDecomposition = std::function<CheckReport(const Subgroup&, const Subgroup&)>;

  void folded(const std::string& id, const PerDecomposition& f,
              const std::function<std::string(const std::vector<CheckReport>&)>& summary = {}) {
    if (!selected(id)) return;
    Fold fold;
    fold.statement = id;
    fold.input = input_.name;
    std::vector<CheckReport> passed;
    try {
      for (const auto& d : ga_.decompositions()) {
        CheckReport r;
        try {
          r = f(d.a, d.b);
        } catch (const std::exception& e) {
          r = error_report(id, input_.name, e);
        }
        fold.add(r, d.a, d.b);
        if (r.status == Status::Pass) passed.push_back(std::move(r));
        if (fold.failure) break;
      }
    } catch (const std::exception& e) {
      out_.push_back(error_report(id, input_.name, e));
      return;
    }
    out_.push_back(fold.finish(summary && !fold.failure ? summary(passed) : std::string{}));
  }

  void run() {
    GroupAnalysis& ga = ga_;
    single("lemma-iss", [&] { return check_lemma_iss(ga); });
    single("lemma-an1", [&] { return check_lemma_an1(ga); });
    single("cor-g-in-cd", [&] { return check_cor_g_in_cd(ga); });
    several({"prop-small-cd-lattice", "lemma-nonabelian-atom", "lemma-abel-atoms", "lemma-coatom",
             "prop-heights-2-3"},
            [&] { return check_structure_props(ga); });
    several({"lemma-interval-of-product", "cor-subgroups-in-cd", "cor-full-transitive"},
            [&] { return check_interval_results(ga); });
    run_an2();

    folded("prop-almost", [&](const Subgroup& a, const Subgroup& b) { return check_prop_almost(ga, a, b); });
    folded("thm-central-product",
           [&](const Subgroup& a, const Subgroup& b) { return check_thm_central_product(ga, a, b); },
           [](const std::vector<CheckReport>& rs) {
             // How often CD(A)·CD(B) falls short of CD(G), proper decompositions or not.
             std::size_t strict = 0;
             for (const auto& r : rs)
               if (r.data.is_object() && r.data.at("products") != r.data.at("members")) ++strict;
             return "; CD(A)·CD(B) ⊊ CD(G) for " + std::to_string(strict);
           });
    folded("cor-mstar", [&](const Subgroup& a, const Subgroup& b) { return check_corollary_mstar(ga, a, b); });
    folded("thm-levels", [&](const Subgroup& a, const Subgroup& b) { return check_thm_levels(ga, a, b); });
    folded("lemma-prod", [&](const Subgroup& a, const Subgroup& b) { return check_lemma_prod(ga, a, b); });
    folded("lemma-pi-is-subgroup",
           [&](const Subgroup& a, const Subgroup& b) { return check_lemma_pi_is_subgroup(ga, a, b); });
    folded("lemma-pi", [&](const Subgroup& a, const Subgroup& b) {
      return both_ways(check_lemma_pi(ga, a, b), [&] { return check_lemma_pi(ga, b, a); });
    });
    folded("prop-nonproper", [&](const Subgroup& a, const Subgroup& b) {
      return both_ways(check_prop_nonproper(ga, a, b), [&] { return check_prop_nonproper(ga, b, a); });
    });

    if (input_.direct_factors)
      single("prop-direct", [&] {
        return check_prop_direct(input_.direct_factors->first, input_.direct_factors->second, options_.limits);
      });
  }

 private:
  // Runs the mirrored check unless the first already failed; a pass beats a skip.
  static CheckReport both_ways(CheckReport first, const std::function<CheckReport()>& second) {
    if (first.status == Status::Fail || first.status == Status::Error) return first;
    CheckReport other = second();
    if (other.status == Status::Fail || other.status == Status::Error) return other;
    return first.status == Status::Pass ? first : other;
  }

  void run_an2() {
    if (!selected("lemma-an2")) return;
    GroupAnalysis& ga = ga_;
    Fold fold;
    fold.statement = "lemma-an2";
    fold.input = input_.name;
    try {
      const Subgroup whole = Subgroup::whole(ga.group());
      const CdLattice& cg = ga.cd();
      for (const Subgroup& x : cg.nodes()) fold.add(check_lemma_an2(ga, whole, x), whole, x);
      for (const auto& d : ga.decompositions()) {
        if (fold.failure) break;
        for (const Subgroup* h : {&d.a, &d.b})
          for (const auto& x : ga.cd_of(h->elements()).nodes) {
            const Subgroup xs = Subgroup::from_trusted(ga.group(), x);
            fold.add(check_lemma_an2(ga, *h, xs), *h, xs);
          }
      }
    } catch (const std::exception& e) {
      out_.push_back(error_report("lemma-an2", input_.name, e));
      return;
    }
    CheckReport r = fold.finish();
    // The fold labels its pair A and B; here the pair is (H, X).
    if (r.status == Status::Fail && r.witness.is_object())
      r.witness = {{"H", r.witness["A"]}, {"X", r.witness["B"]}, {"detail", r.witness["detail"]}};
    out_.push_back(std::move(r));
  }

  const SuiteInput& input_;
  const SuiteOptions& options_;
  std::vector<CheckReport>& out_;
  GroupAnalysis ga_;
};

}  // namespace

std::vector<std::string> statement_ids() { return kStatements; }

std::vector<SuiteInput> product_matrix(const Limits& limits) {
  const Group q8 = catalog_group("Q8", limits);
  const Group d8 = catalog_group("D8", limits);
  const Group c4 = catalog_group("C4", limits);
  const Group c2 = catalog_group("C2", limits);
  return {
      amalgamate_involutions(q8, q8, limits), amalgamate_involutions(d8, c4, limits),
      amalgamate_involutions(q8, c4, limits), amalgamate_involutions(d8, d8, limits),
      direct(q8, q8, limits),                 direct(q8, c2, limits),
      direct(c2, q8, limits),                 direct(d8, c2, limits),
  };
}

std::vector<SuiteInput> standard_inputs(std::size_t max_order, const Limits& limits) {
  std::vector<SuiteInput> out;
  for (const auto& name : standard_catalog(max_order)) out.push_back({name, catalog_group(name, limits), std::nullopt});
  for (auto& p : product_matrix(limits))
    if (p.group.order() <= max_order) out.push_back(std::move(p));
  return out;
}

std::vector<SuiteInput> default_inputs(const Limits& limits) {
  std::vector<SuiteInput> out;
  for (const auto& name : standard_catalog(32)) out.push_back({name, catalog_group(name, limits), std::nullopt});
  for (auto& p : product_matrix(limits)) out.push_back(std::move(p));
  return out;
}

std::vector<CheckReport> run_suite(const std::vector<SuiteInput>& inputs, const SuiteOptions& options) {
  std::vector<CheckReport> out;
  for (const SuiteInput& input : inputs) {
    try {
      InputRun(input, options, out).run();
    } catch (const std::exception& e) {
      out.push_back(error_report("suite", input.name, e));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.statement, a.input) < std::tie(b.statement, b.input);
  });
  return out;
}

std::vector<std::string> explore_antichain(const std::vector<SuiteInput>& inputs, const Limits& limits) {
  std::vector<std::string> out;
  for (const SuiteInput& input : inputs) {
    const CdLattice cd = cd_lattice(input.group, limits);
    if (!cd[cd.top()].is_whole() || cd.lattice_height() != 2) continue;
    bool abelian = false, nonabelian = false;
    for (std::size_t i : cd.atoms()) (cd[i].is_abelian() ? abelian : nonabelian) = true;
    if (abelian && nonabelian) out.push_back(input.name);
  }
  return out;
}

}  // namespace cdlat
