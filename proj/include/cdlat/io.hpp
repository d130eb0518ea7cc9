#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdlat/cd_lattice.hpp"
#include "cdlat/central_product.hpp"
#include "cdlat/theorems.hpp"

namespace cdlat {

/// Reads `{"name", "order", "table"}` or `{"name", "degree", "generators"}`.
/// Throws InvalidInput for the wrong shape, then whatever the constructor throws.
Group group_from_json(const nlohmann::json& doc, const Limits& limits = {});
nlohmann::json group_to_json(const Group& g);

/// Parses a file; throws InvalidInput if it cannot be read or is not JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// A catalog name, else a group file relative to `base`, else the path as given.
Group resolve_group_ref(const std::string& ref, const std::filesystem::path& base, const Limits& limits = {});

/// `{"A": ref, "B": ref, "U": [...], "V": [...], "phi": [[u, v], ...]}`
CentralProductSpec product_spec_from_json(const nlohmann::json& doc, const std::filesystem::path& base,
                                          const Limits& limits = {});
bool looks_like_product_spec(const nlohmann::json& doc);

/// The product's table plus both embeddings and the amalgamated subgroup.
nlohmann::json product_to_json(const CentralProductResult& result);

nlohmann::json lattice_to_json(const CdLattice& cd);
/// Hasse diagram, bottom to top, one rank per height.
std::string lattice_to_dot(const CdLattice& cd);

/// `ms` is written as 0 unless `timings` is set, so output is reproducible.
nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool timings = false);
std::string reports_to_text(const std::vector<CheckReport>& reports, bool timings = false);

}  // namespace cdlat
