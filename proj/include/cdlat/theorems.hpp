#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cdlat/cd_lattice.hpp"
#include "cdlat/central_product.hpp"
#include "cdlat/group.hpp"
#include "cdlat/subgroups.hpp"

namespace cdlat {

enum class Status { Pass, Fail, Skip, Error };

std::string_view to_string(Status s) noexcept;

/// Outcome of checking one statement on one input. A failing report always
/// carries a witness: the first counterexample in canonical order.
struct CheckReport {
  std::string statement;
  std::string input;
  Status status = Status::Pass;
  nlohmann::json witness;  // null unless there is something to show
  std::chrono::duration<double, std::milli> elapsed{0};
  std::string detail;      // counts, skip reasons, statistics
  nlohmann::json data;     // statistics recorded but never asserted

  bool passed() const noexcept { return status == Status::Pass; }
};

/// CD lattice of a subgroup H, computed from H's own Cayley table and carried
/// back into the parent's element numbering.
struct LiftedCd {
  Measure max_measure = 1;
  std::vector<ElementSet> nodes;  // canonical order of the subgroup's lattice
  std::vector<std::size_t> height;
  std::vector<std::size_t> depth;
  std::size_t lattice_height = 0;
  std::size_t top = 0;
  std::size_t bottom = 0;

  std::optional<std::size_t> index_of(const ElementSet& s) const;
  bool contains(const ElementSet& s) const { return index_of(s).has_value(); }

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
};

/// Memoised facts about one group shared by the checks: the subgroup lattice,
/// centralizers, CD(G), CD lattices of subgroups, central decompositions.
/// Not thread-safe; use one instance per thread.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(Group g, Limits limits = {});

  const Group& group() const noexcept { return group_; }
  const Limits& limits() const noexcept { return limits_; }

  const SubgroupSet& subgroups();
  /// Index in subgroups(); throws LatticeViolation for a non-subgroup.
  std::size_t index_of(const ElementSet& h);
  const ElementSet& centralizer_of(std::size_t subgroup_index);
  const std::vector<Element>& generators_of(std::size_t subgroup_index);
  std::size_t join_of(std::size_t i, std::size_t j);
  Measure measure_of(std::size_t subgroup_index);

  const ElementSet& center();
  const CdLattice& cd();
  const LiftedCd& cd_of(const ElementSet& h);
  const std::vector<InternalDecomposition>& decompositions();

 private:
  Group group_;
  Limits limits_;
  std::unique_ptr<SubgroupSet> subgroups_;
  std::vector<std::optional<ElementSet>> centralizers_;
  std::vector<std::optional<std::vector<Element>>> generators_;
  std::optional<ElementSet> center_;
  std::unique_ptr<CdLattice> cd_;
  std::unordered_map<ElementSet, LiftedCd, ElementSetHash> sub_cd_;
  std::optional<std::vector<InternalDecomposition>> decompositions_;
};

LiftedCd lift_cd(const Subgroup& h, const Limits& limits = {});

// Checks over a central decomposition G = AB. Each throws
// NotCentralDecomposition if AB ≠ G or [A, B] ≠ 1.

CheckReport check_prop_almost(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);
CheckReport check_thm_central_product(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);
CheckReport check_corollary_mstar(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);
CheckReport check_thm_levels(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);
CheckReport check_lemma_prod(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);
CheckReport check_lemma_pi_is_subgroup(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);
CheckReport check_lemma_pi(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);

/// Requires G = AB with B ≤ Z(G); otherwise the report is a skip.
CheckReport check_prop_nonproper(GroupAnalysis& g, const Subgroup& a, const Subgroup& b);

// Checks over all subgroups of one group.

CheckReport check_lemma_iss(GroupAnalysis& g);
CheckReport check_lemma_an1(GroupAnalysis& g);
/// Requires X ≤ H, G = H·C_G(X) and X ∈ CD(H); otherwise the report is a skip.
CheckReport check_lemma_an2(GroupAnalysis& g, const Subgroup& h, const Subgroup& x);
CheckReport check_cor_g_in_cd(GroupAnalysis& g);

/// One report each for: prop-small-cd-lattice, lemma-nonabelian-atom,
/// lemma-abel-atoms, lemma-coatom, prop-heights-2-3. A statement whose
/// hypothesis does not hold on G is reported as a skip.
std::vector<CheckReport> check_structure_props(GroupAnalysis& g);

/// One report each for: lemma-interval-of-product, cor-subgroups-in-cd,
/// cor-full-transitive.
std::vector<CheckReport> check_interval_results(GroupAnalysis& g);

/// Builds A × B and compares CD(A × B) with CD(A)·CD(B).
CheckReport check_prop_direct(const Group& a, const Group& b, const Limits& limits = {});

// Convenience overloads building a throwaway analysis.
CheckReport check_lemma_iss(const Group& g, const Limits& limits = {});
CheckReport check_lemma_an1(const Group& g, const Limits& limits = {});
CheckReport check_thm_central_product(const Group& g, const Subgroup& a, const Subgroup& b,
                                      const Limits& limits = {});

// ---------------------------------------------------------------------------
// Suite

struct SuiteInput {
  std::string name;
  Group group;
  /// Factors when the input was built as a direct product (for prop-direct).
  std::optional<std::pair<Group, Group>> direct_factors;
};

/// Catalog groups of order <= max_order followed by the constructed central
/// and direct products of order <= max_order.
std::vector<SuiteInput> standard_inputs(std::size_t max_order, const Limits& limits = {});

/// Catalog groups of order <= 32 and every constructed product.
std::vector<SuiteInput> default_inputs(const Limits& limits = {});

/// The constructed products alone: Q8*Q8, D8*C4, Q8*C4, D8*D8, Q8xQ8, Q8xC2,
/// C2xQ8, D8xC2.
std::vector<SuiteInput> product_matrix(const Limits& limits = {});

/// Every statement identifier the suite can emit, sorted.
std::vector<std::string> statement_ids();

struct SuiteOptions {
  std::vector<std::string> only;  // statement ids; empty runs everything
  Limits limits;
};

/// Runs every selected statement over every input and every central
/// decomposition of it. Errors are captured per report. The result is sorted
/// by (statement, input).
std::vector<CheckReport> run_suite(const std::vector<SuiteInput>& inputs, const SuiteOptions& options = {});

/// Groups among the inputs with G ∈ CD(G), CD(G) of height 2, and both abelian
/// and nonabelian atoms. Exploratory only.
std::vector<std::string> explore_antichain(const std::vector<SuiteInput>& inputs, const Limits& limits = {});

}  // namespace cdlat
