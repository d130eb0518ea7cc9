#include "cdlat/group.hpp"

#include "closure_state.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace cdlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::MalformedCycle: return "MalformedCycle";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotIsomorphism: return "NotIsomorphism";
    case ErrorCode::NotCentralDecomposition: return "NotCentralDecomposition";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::GradednessViolation: return "GradednessViolation";
    case ErrorCode::LatticeViolation: return "LatticeViolation";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void check_index(const Group& g, Element x) {
  if (x >= g.order())
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(x) + " not in group of order " + std::to_string(g.order()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Group

Group::Group() : data_(std::make_shared<const Data>(Data{"C1", 1, {0}, {0}, {"()"}, true})) {}

Group Group::from_trusted_table(std::string name, std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels) {
  Data d;
  d.name = std::move(name);
  d.order = order;
  d.table = std::move(table);
  d.labels = std::move(labels);
  d.inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    const Element* row = &d.table[a * order];
    for (std::size_t b = 0; b < order; ++b) {
      if (row[b] == 0) {
        d.inverse[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  d.abelian = true;
  for (std::size_t a = 0; a < order && d.abelian; ++a)
    for (std::size_t b = a + 1; b < order; ++b)
      if (d.table[a * order + b] != d.table[b * order + a]) {
        d.abelian = false;
        break;
      }
  return Group(std::make_shared<const Data>(std::move(d)));
}

std::size_t Group::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

std::string Group::label(Element x) const {
  if (x < data_->labels.size()) return data_->labels[x];
  return std::to_string(x);
}

std::optional<Element> Group::find(std::string_view label) const {
  for (std::size_t i = 0; i < data_->labels.size(); ++i)
    if (data_->labels[i] == label) return static_cast<Element>(i);
  return std::nullopt;
}

Group Group::renamed(std::string name) const {
  Data d = *data_;
  d.name = std::move(name);
  return Group(std::make_shared<const Data>(std::move(d)));
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::from_elements(const Group& g, ElementSet members) {
  if (members.universe() != g.order())
    throw Error(ErrorCode::ParentMismatch, "bitset width does not match group order");
  if (!members.test(0)) throw Error(ErrorCode::NotASubgroup, "identity missing");
  std::vector<Element> list = members.elements();
  for (Element a : list) {
    if (!members.test(g.inv(a)))
      throw Error(ErrorCode::NotASubgroup, "inverse of " + std::to_string(a) + " missing");
    for (Element b : list)
      if (!members.test(g.mul(a, b)))
        throw Error(ErrorCode::NotASubgroup,
                    "product of " + std::to_string(a) + " and " + std::to_string(b) + " missing");
  }
  return Subgroup(g, std::move(members));
}

Subgroup Subgroup::from_trusted(const Group& g, ElementSet members) { return Subgroup(g, std::move(members)); }

Subgroup Subgroup::trivial(const Group& g) {
  ElementSet s(g.order());
  s.set(0);
  return Subgroup(g, std::move(s));
}

Subgroup Subgroup::whole(const Group& g) { return Subgroup(g, ElementSet::full(g.order())); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  require_same_parent(*this, other, "subgroup comparison");
  return members_.is_subset_of(other.members_);
}

bool Subgroup::is_abelian() const {
  const auto gens = generators_of(*this);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (group_.mul(gens[i], gens[j]) != group_.mul(gens[j], gens[i])) return false;
  return true;
}

void require_same_parent(const Group& g, const Subgroup& h, std::string_view what) {
  if (!h.group().same_as(g))
    throw Error(ErrorCode::ParentMismatch, std::string(what) + ": subgroup of a different group");
}

void require_same_parent(const Subgroup& a, const Subgroup& b, std::string_view what) {
  if (!a.group().same_as(b.group()))
    throw Error(ErrorCode::ParentMismatch, std::string(what) + ": subgroups of different groups");
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool GroupHomomorphism::is_homomorphism() const {
  const Group& s = source.group();
  const Group& t = target.group();
  if (map.size() != s.order()) return false;
  const auto members = source.elements().elements();
  for (Element a : members)
    if (map[a] == kUnmapped || map[a] >= t.order() || !target.contains(map[a])) return false;
  for (Element a : members)
    for (Element b : members)
      if (map[s.mul(a, b)] != t.mul(map[a], map[b])) return false;
  return true;
}

bool GroupHomomorphism::is_injective() const {
  ElementSet seen(target.group().order());
  bool ok = true;
  source.elements().for_each([&](Element a) {
    const Element y = map[a];
    if (y == kUnmapped || y >= seen.universe() || seen.test(y)) {
      ok = false;
      return;
    }
    seen.set(y);
  });
  return ok;
}

bool GroupHomomorphism::is_bijective() const { return is_injective() && source.order() == target.order(); }

Subgroup GroupHomomorphism::image() const {
  ElementSet img(target.group().order());
  source.elements().for_each([&](Element a) { img.set(map[a]); });
  return Subgroup::from_trusted(target.group(), std::move(img));
}

GroupHomomorphism GroupHomomorphism::identity(const Subgroup& s) {
  std::vector<Element> map(s.group().order(), kUnmapped);
  s.elements().for_each([&](Element a) { map[a] = a; });
  return {s, s, std::move(map)};
}

// ---------------------------------------------------------------------------
// Construction

Group group_from_cayley_table(const std::vector<std::vector<Element>>& rows, std::string name,
                              const Limits& limits) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::MalformedTable, "empty table");
  if (n > limits.order_cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.order_cap));
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw Error(ErrorCode::MalformedTable, "row " + std::to_string(a) + " has length " +
                                                 std::to_string(rows[a].size()) + ", expected " +
                                                 std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n)
        throw Error(ErrorCode::MalformedTable, "entry " + std::to_string(rows[a][b]) + " at (" +
                                                   std::to_string(a) + ", " + std::to_string(b) +
                                                   ") out of range");
      t[a * n + b] = rows[a][b];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x] != x || t[x * n] != x)
      throw Error(ErrorCode::NoIdentityAtZero, "0·" + std::to_string(x) + " = " + std::to_string(t[x]) +
                                                   ", " + std::to_string(x) + "·0 = " +
                                                   std::to_string(t[x * n]));
  }
  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t b = 0; b < n; ++b) {
      const Element c = t[a * n + b];
      if (seen[c] != n)
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + ": " + std::to_string(a) + "·" +
                                                   std::to_string(seen[c]) + " = " + std::to_string(a) +
                                                   "·" + std::to_string(b) + " = " + std::to_string(c));
      seen[c] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t a = 0; a < n; ++a) {
      const Element c = t[a * n + b];
      if (seen[c] != n)
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(b) + ": " + std::to_string(seen[c]) +
                                                   "·" + std::to_string(b) + " = " + std::to_string(a) +
                                                   "·" + std::to_string(b) + " = " + std::to_string(c));
      seen[c] = a;
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
      throw Error(ErrorCode::NotAssociative, "(ab)c != a(bc) for (a, b, c) = " + triple(a, b, c));
  };
  if (n <= limits.exhaustive_associativity_up_to) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < 10 * n * n; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
  return Group::from_trusted_table(std::move(name), n, std::move(t));
}

std::vector<Element> parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Element> image(degree);
  for (std::size_t i = 0; i < degree; ++i) image[i] = static_cast<Element>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::MalformedCycle, "\"" + std::string(text) + "\": " + why);
  };
  // Juxtaposed cycles compose left to right: p ↦ c_k(...c_1(p)).
  std::vector<std::vector<Element>> cycles;
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw malformed("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<Element> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw malformed("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw malformed(std::string("unexpected character '") + text[pos] + "'");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1;
        ++pos;
      }
      if (value == 0 || value > degree)
        throw Error(ErrorCode::PointOutOfRange, "\"" + std::string(text) + "\": point " +
                                                    std::to_string(value) + " outside 1.." +
                                                    std::to_string(degree));
      const auto p = static_cast<Element>(value - 1);
      if (std::find(cycle.begin(), cycle.end(), p) != cycle.end())
        throw malformed("point " + std::to_string(value) + " repeated within a cycle");
      cycle.push_back(p);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  for (const auto& cycle : cycles) {
    std::vector<Element> step(degree);
    for (std::size_t i = 0; i < degree; ++i) step[i] = static_cast<Element>(i);
    for (std::size_t i = 0; i < cycle.size(); ++i) step[cycle[i]] = cycle[(i + 1) % cycle.size()];
    for (auto& x : image) x = step[x];
  }
  return image;
}

std::string format_permutation(std::span<const Element> image) {
  std::string out;
  std::vector<bool> done(image.size(), false);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (done[start] || image[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = image[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Group group_from_permutations(std::span<const std::string> generators, std::size_t degree, std::string name,
                              const Limits& limits) {
  if (degree == 0) throw Error(ErrorCode::PointOutOfRange, "degree must be positive");
  using Perm = std::vector<Element>;
  std::vector<Perm> gens;
  for (const auto& text : generators) gens.push_back(parse_permutation(text, degree));
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Element>(i);
  if (name.empty()) {
    name = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) name += (i ? "," : "") + generators[i];
    name += ">";
  }
  auto mul = [](const Perm& x, const Perm& y) {
    Perm z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = y[x[i]];
    return z;
  };
  return group_from_generators(std::move(name), gens, id, mul,
                               [](const Perm& p) { return format_permutation(p); }, limits);
}

ProductGroup direct_product(const Group& a, const Group& b, const Limits& limits) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > limits.order_cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "direct product of order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.order_cap));
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>(
          a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
          b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    labels.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      labels.push_back("(" + a.label(static_cast<Element>(x / nb)) + "," + b.label(static_cast<Element>(x % nb)) + ")");
  }
  Group g = Group::from_trusted_table(a.name() + "x" + b.name(), n, std::move(t), std::move(labels));
  std::vector<Element> ma(na), mb(nb);
  for (std::size_t x = 0; x < na; ++x) ma[x] = static_cast<Element>(x * nb);
  for (std::size_t y = 0; y < nb; ++y) mb[y] = static_cast<Element>(y);
  GroupHomomorphism ea{Subgroup::whole(a), Subgroup::whole(g), std::move(ma)};
  GroupHomomorphism eb{Subgroup::whole(b), Subgroup::whole(g), std::move(mb)};
  return {g, std::move(ea), std::move(eb)};
}

ElementSet InducedGroup::lift(const ElementSet& local) const {
  ElementSet out(parent_order);
  local.for_each([&](Element x) { out.set(to_parent[x]); });
  return out;
}

ElementSet InducedGroup::lower(const ElementSet& parent) const {
  ElementSet out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (parent.test(to_parent[i])) out.set(static_cast<Element>(i));
  return out;
}

InducedGroup induced_group(const Subgroup& h, std::string name) {
  const Group& g = h.group();
  std::vector<Element> members = h.elements().elements();
  const std::size_t n = members.size();
  std::vector<Element> local(g.order(), kUnmapped);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Element>(i);
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = local[g.mul(members[a], members[b])];
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Element x : members) labels.push_back(g.label(x));
  if (name.empty()) name = g.name() + "[" + std::to_string(n) + "]";
  return {Group::from_trusted_table(std::move(name), n, std::move(t), std::move(labels)), std::move(members),
          g.order()};
}

// ---------------------------------------------------------------------------
// Subgroup arithmetic

Subgroup subgroup_closure(const Group& g, std::span<const Element> seed) {
  detail::ClosureState st(g);
  for (Element x : seed) {
    check_index(g, x);
    st.add(x);
  }
  return Subgroup::from_trusted(g, std::move(st.bits));
}

Subgroup subgroup_closure(const Group& g, const ElementSet& seed) {
  if (seed.universe() != g.order()) throw Error(ErrorCode::ParentMismatch, "seed width does not match group order");
  detail::ClosureState st(g);
  seed.for_each([&](Element x) { st.add(x); });
  return Subgroup::from_trusted(g, std::move(st.bits));
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k, "join");
  detail::ClosureState st(h.group());
  for (Element x : generators_of(h)) st.add(x);
  for (Element x : generators_of(k)) st.add(x);
  return Subgroup::from_trusted(h.group(), std::move(st.bits));
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k, "intersection");
  return Subgroup::from_trusted(h.group(), h.elements() & k.elements());
}

std::vector<Element> generators_of(const Subgroup& h) {
  detail::ClosureState st(h.group());
  h.elements().for_each([&](Element x) { st.add(x); });
  return std::move(st.gens);
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  require_same_parent(g, h, "centralizer");
  const auto gens = generators_of(h);
  ElementSet c(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool central = true;
    for (Element s : gens)
      if (g.mul(e, s) != g.mul(s, e)) {
        central = false;
        break;
      }
    if (central) c.set(e);
  }
  return Subgroup::from_trusted(g, std::move(c));
}

Subgroup center(const Group& g) { return centralizer(g, Subgroup::whole(g)); }

bool commutes(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "commutes");
  const Group& g = a.group();
  const auto ga = generators_of(a);
  const auto gb = generators_of(b);
  for (Element x : ga)
    for (Element y : gb)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

ElementSet product_set(const Group& g, const ElementSet& h, const ElementSet& k) {
  ElementSet out(g.order());
  const auto ks = k.elements();
  // Left cosets xK partition the product; x ∈ HK already means xK ⊆ HK.
  h.for_each([&](Element x) {
    if (out.test(x)) return;
    for (Element y : ks) out.set(g.mul(x, y));
  });
  return out;
}

SetProduct set_product(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k, "set_product");
  SetProduct p{product_set(h.group(), h.elements(), k.elements()), false};
  p.is_subgroup = join(h, k).order() == p.elements.count();
  return p;
}

}  // namespace cdlat
