#include "cdlat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cdlat/catalog.hpp"
#include "cdlat/io.hpp"

namespace cdlat {

namespace {

Limits limits_from_env() {
  Limits limits;
  if (const char* cap = std::getenv("CDLAT_ORDER_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(cap, &used);
      if (used != std::string(cap).size() || v == 0) throw std::invalid_argument(cap);
      limits.order_cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, std::string("CDLAT_ORDER_CAP must be a positive integer, got \"") + cap + "\"");
    }
  }
  return limits;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  f << text;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::EnumerationBudgetExceeded:
      return kExitLimit;
    default:
      return kExitInvalidInput;
  }
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) out.push_back(id);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chermak-Delgado lattices of finite groups and their central products", "cdlat"};
  app.require_subcommand(1);

  std::string catalog_name, file, format = "json", out_path;
  auto* cd = app.add_subcommand("cd", "Compute the CD lattice of a group");
  auto* cat_opt = cd->add_option("--catalog", catalog_name, "Catalog group name");
  auto* file_opt = cd->add_option("--file", file, "Group JSON or central-product spec JSON");
  cat_opt->excludes(file_opt);
  cd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  cd->add_option("--out", out_path, "Write to this file instead of stdout");

  std::string spec_path, product_out;
  auto* product = app.add_subcommand("product", "Build a central product from a spec file");
  product->add_option("spec", spec_path, "Central-product spec JSON")->required();
  product->add_option("--out", product_out, "Write to this file instead of stdout");

  std::size_t max_order = 0, budget = 0;
  std::vector<std::string> only_raw, groups;
  bool as_json = false, timings = false, explore = false;
  auto* verify = app.add_subcommand("verify", "Run the statement checks over a group catalog");
  auto* max_opt = verify->add_option("--max-order", max_order, "Catalog groups and products up to this order");
  verify->add_option("--only", only_raw, "Statement ids, comma separated");
  verify->add_option("--group", groups, "Run on these groups only (catalog or product names)");
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_option("--budget", budget, "Subgroup enumeration budget");
  verify->add_flag("--timings", timings, "Record elapsed times in the report");
  verify->add_flag("--explore-antichain", explore,
                   "Also list inputs whose CD lattice is a height-2 mix of abelian and nonabelian atoms");

  auto* catalog = app.add_subcommand("catalog", "Catalog queries");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List the standard catalog");
  std::size_t list_max = 128;
  list->add_option("--max-order", list_max, "Largest order listed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    Limits limits = limits_from_env();

    if (cd->parsed()) {
      if (catalog_name.empty() && file.empty()) throw Error(ErrorCode::InvalidInput, "cd needs --catalog or --file");
      Group g;
      if (!catalog_name.empty()) {
        g = catalog_group(catalog_name, limits);
      } else {
        const std::filesystem::path path(file);
        const nlohmann::json doc = read_json_file(path);
        if (looks_like_product_spec(doc))
          g = central_product(product_spec_from_json(doc, path.parent_path(), limits), {}, limits).group;
        else
          g = group_from_json(doc, limits);
      }
      const CdLattice lattice = cd_lattice(g, limits);
      emit(format == "dot" ? lattice_to_dot(lattice) : lattice_to_json(lattice).dump(2) + "\n", out_path, out);
      return kExitOk;
    }

    if (product->parsed()) {
      const std::filesystem::path path(spec_path);
      const auto spec = product_spec_from_json(read_json_file(path), path.parent_path(), limits);
      emit(product_to_json(central_product(spec, {}, limits)).dump(2) + "\n", product_out, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      if (budget > 0) limits.enumeration_budget = budget;
      SuiteOptions options;
      options.limits = limits;
      options.only = split_ids(only_raw);
      const auto known = statement_ids();
      for (const auto& id : options.only)
        if (std::find(known.begin(), known.end(), id) == known.end())
          throw Error(ErrorCode::InvalidInput, "unknown statement id \"" + id + "\"");

      std::vector<SuiteInput> inputs;
      if (!groups.empty()) {
        const auto matrix = product_matrix(limits);
        for (const auto& name : groups) {
          auto it = std::find_if(matrix.begin(), matrix.end(), [&](const SuiteInput& s) { return s.name == name; });
          if (it != matrix.end())
            inputs.push_back(*it);
          else
            inputs.push_back({name, catalog_group(name, limits), std::nullopt});
        }
      } else if (*max_opt) {
        inputs = standard_inputs(max_order, limits);
      } else {
        inputs = default_inputs(limits);
      }

      const auto reports = run_suite(inputs, options);
      if (as_json)
        out << reports_to_json(reports, timings).dump(2) << "\n";
      else
        out << reports_to_text(reports, timings);
      if (explore) {
        const auto found = explore_antichain(inputs, limits);
        err << "height-2 CD lattices with mixed atoms: " << found.size() << "\n";
        for (const auto& name : found) err << "  " << name << "\n";
      }
      const bool clean = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) {
        return r.status == Status::Pass || r.status == Status::Skip;
      });
      return clean ? kExitOk : kExitChecksFailed;
    }

    if (list->parsed()) {
      for (const auto& name : standard_catalog(list_max)) {
        const Group g = catalog_group(name, limits);
        out << name << " " << g.order() << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace cdlat
