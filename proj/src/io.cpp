#include "cdlat/io.hpp"

#include <cstdint>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cdlat/catalog.hpp"

namespace cdlat {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

// Parsed text yields unsigned numbers; documents built in code may hold signed ones.
bool is_index(const json& x) {
  return x.is_number_unsigned() || (x.is_number_integer() && x.get<std::int64_t>() >= 0);
}

std::vector<Element> index_list(const json& v, const char* field) {
  if (!v.is_array()) bad(std::string(field) + " must be an array of element indices");
  std::vector<Element> out;
  for (const auto& x : v) {
    if (!is_index(x)) bad(std::string(field) + " holds a non-index entry " + x.dump());
    out.push_back(x.get<Element>());
  }
  return out;
}

json map_json(const GroupHomomorphism& f) {
  json out = json::array();
  f.source.elements().for_each([&](Element x) { out.push_back(f(x)); });
  return out;
}

}  // namespace

Group group_from_json(const json& doc, const Limits& limits) {
  if (!doc.is_object()) bad("group document must be a JSON object");
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "G";
  if (doc.contains("table")) {
    const json& t = doc["table"];
    if (!t.is_array()) throw Error(ErrorCode::MalformedTable, "table must be an array of rows");
    std::vector<std::vector<Element>> rows;
    for (const auto& row : t) {
      if (!row.is_array()) throw Error(ErrorCode::MalformedTable, "table row is not an array");
      std::vector<Element> r;
      for (const auto& x : row) {
        if (!is_index(x)) throw Error(ErrorCode::MalformedTable, "table entry " + x.dump() + " is not an index");
        r.push_back(x.get<Element>());
      }
      rows.push_back(std::move(r));
    }
    if (doc.contains("order") && (!is_index(doc["order"]) || doc["order"].get<std::size_t>() != rows.size()))
      throw Error(ErrorCode::MalformedTable, "order does not match the number of table rows");
    return group_from_cayley_table(rows, name, limits);
  }
  if (doc.contains("generators")) {
    if (!doc.contains("degree") || !is_index(doc["degree"])) bad("permutation group needs a degree");
    std::vector<std::string> gens;
    if (!doc["generators"].is_array()) bad("generators must be an array of strings");
    for (const auto& g : doc["generators"]) {
      if (!g.is_string()) bad("generator " + g.dump() + " is not a string");
      gens.push_back(g.get<std::string>());
    }
    return group_from_permutations(gens, doc["degree"].get<std::size_t>(), name, limits);
  }
  bad("group document needs a table or generators");
}

json group_to_json(const Group& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.order(); ++j) row.push_back(g.mul(static_cast<Element>(i), static_cast<Element>(j)));
    rows.push_back(std::move(row));
  }
  return {{"name", g.name()}, {"order", g.order()}, {"table", std::move(rows)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

Group resolve_group_ref(const std::string& ref, const std::filesystem::path& base, const Limits& limits) {
  if (is_catalog_name(ref)) return catalog_group(ref, limits);
  std::filesystem::path p(ref);
  if (p.is_relative() && std::filesystem::exists(base / p)) p = base / p;
  if (!std::filesystem::exists(p)) bad("\"" + ref + "\" is neither a catalog name nor a readable file");
  return group_from_json(read_json_file(p), limits);
}

bool looks_like_product_spec(const json& doc) { return doc.is_object() && doc.contains("A") && doc.contains("B"); }

CentralProductSpec product_spec_from_json(const json& doc, const std::filesystem::path& base, const Limits& limits) {
  if (!looks_like_product_spec(doc)) bad("product spec needs A and B");
  for (const char* key : {"A", "B"})
    if (!doc[key].is_string()) bad(std::string(key) + " must be a catalog name or file path");
  const Group a = resolve_group_ref(doc["A"].get<std::string>(), base, limits);
  const Group b = resolve_group_ref(doc["B"].get<std::string>(), base, limits);
  const auto u = index_list(doc.value("U", json::array()), "U");
  const auto v = index_list(doc.value("V", json::array()), "V");
  std::vector<std::pair<Element, Element>> phi;
  const json pairs = doc.value("phi", json::array());
  if (!pairs.is_array()) bad("phi must be an array of [u, v] pairs");
  for (const auto& p : pairs) {
    const auto uv = index_list(p, "phi entry");
    if (uv.size() != 2) bad("phi entry " + p.dump() + " is not a pair");
    phi.emplace_back(uv[0], uv[1]);
  }
  return make_central_product_spec(a, b, u, v, phi);
}

json product_to_json(const CentralProductResult& r) {
  json out = group_to_json(r.group);
  out["embedA"] = map_json(r.embed_a);
  out["embedB"] = map_json(r.embed_b);
  out["amalgam"] = r.amalgam.elements().elements();
  return out;
}

json lattice_to_json(const CdLattice& cd) {
  const auto atoms = cd.atoms();
  const auto coatoms = cd.coatoms();
  json nodes = json::array();
  for (std::size_t i = 0; i < cd.size(); ++i) {
    nodes.push_back({{"index", i},
                     {"elements", cd[i].elements().elements()},
                     {"order", cd[i].order()},
                     {"measure", measure(cd.group(), cd[i])},
                     {"height", cd.height(i)},
                     {"depth", cd.depth(i)},
                     {"isAtom", std::find(atoms.begin(), atoms.end(), i) != atoms.end()},
                     {"isCoatom", std::find(coatoms.begin(), coatoms.end(), i) != coatoms.end()}});
  }
  json edges = json::array();
  for (const auto& [lo, hi] : cd.hasse_edges()) edges.push_back({lo, hi});
  return {{"group", {{"name", cd.group().name()}, {"order", cd.group().order()}}},
          {"maxMeasure", cd.max_measure()},
          {"height", cd.lattice_height()},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"top", cd.top()},
          {"bottom", cd.bottom()}};
}

std::string lattice_to_dot(const CdLattice& cd) {
  std::ostringstream os;
  os << "digraph CD {\n  rankdir=BT;\n  node [shape=box];\n  label=\"CD(" << cd.group().name()
     << "), m*=" << cd.max_measure() << "\";\n";
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < cd.size(); ++i) {
    os << "  n" << i << " [label=\"|H|=" << cd[i].order() << ", m=" << measure(cd.group(), cd[i]) << "\"];\n";
    ranks[cd.height(i)].push_back(i);
  }
  for (const auto& [h, members] : ranks) {
    os << "  { rank=same;";
    for (std::size_t i : members) os << " n" << i << ";";
    os << " }\n";
  }
  for (const auto& [lo, hi] : cd.hasse_edges()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

json reports_to_json(const std::vector<CheckReport>& reports, bool timings) {
  json out = json::array();
  for (const auto& r : reports) {
    // Whole milliseconds: the tool never prints floats.
    const long long ms = timings ? std::llround(r.elapsed.count()) : 0;
    out.push_back({{"statement", r.statement},
                   {"input", r.input},
                   {"status", std::string(to_string(r.status))},
                   {"witness", r.witness},
                   {"ms", ms}});
  }
  return out;
}

std::string reports_to_text(const std::vector<CheckReport>& reports, bool timings) {
  std::size_t width = 9;
  for (const auto& r : reports) width = std::max(width, r.statement.size());
  std::ostringstream os;
  std::map<Status, std::size_t> tally;
  for (const auto& r : reports) {
    ++tally[r.status];
    std::string st(to_string(r.status));
    os << st << std::string(6 - st.size(), ' ') << r.statement << std::string(width + 2 - r.statement.size(), ' ')
       << r.input;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    if (timings) os << "  " << static_cast<long long>(std::llround(r.elapsed.count())) << " ms";
    os << "\n";
    if (!r.witness.is_null()) os << "      witness: " << r.witness.dump() << "\n";
  }
  os << reports.size() << " reports: " << tally[Status::Pass] << " pass, " << tally[Status::Fail] << " fail, "
     << tally[Status::Skip] << " skip, " << tally[Status::Error] << " error\n";
  return os.str();
}

}  // namespace cdlat
