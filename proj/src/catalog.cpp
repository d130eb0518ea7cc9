#include "cdlat/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <tuple>

namespace cdlat {

namespace {

std::optional<std::size_t> parse_number(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t mod(long long x, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((x % m) + m) % m);
}

std::string power(std::string_view base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(k);
}

std::string word(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += p;
  return out.empty() ? "1" : out;
}

using Pair = std::pair<std::size_t, std::size_t>;

Group cyclic(std::size_t n, std::string name, const Limits& limits) {
  if (n == 1) return Group().renamed(std::move(name));
  return group_from_generators(
      std::move(name), std::vector<std::size_t>{1}, std::size_t{0},
      [n](std::size_t x, std::size_t y) { return (x + y) % n; },
      [](std::size_t k) { return word({power("a", k)}); }, limits);
}

// r^k s^e with s r s = r^-1
Group dihedral(std::size_t n, std::string name, const Limits& limits) {
  auto mul = [n](const Pair& x, const Pair& y) {
    const long long k = x.second ? static_cast<long long>(x.first) - static_cast<long long>(y.first)
                                 : static_cast<long long>(x.first + y.first);
    return Pair{mod(k, n), x.second ^ y.second};
  };
  auto label = [](const Pair& x) { return word({power("r", x.first), x.second ? "s" : ""}); };
  std::vector<Pair> gens;
  if (n > 1) gens.push_back({1, 0});
  gens.push_back({0, 1});
  return group_from_generators(std::move(name), gens, Pair{0, 0}, mul, label, limits);
}

// a^k b^e with a of order 2m, b^2 = a^m, b a b^-1 = a^-1
Group dicyclic(std::size_t m, std::string name, const Limits& limits) {
  const std::size_t n = 2 * m;
  auto mul = [n, m](const Pair& x, const Pair& y) {
    if (x.second == 0) return Pair{(x.first + y.first) % n, y.second};
    const long long k = static_cast<long long>(x.first) - static_cast<long long>(y.first);
    if (y.second == 0) return Pair{mod(k, n), 1};
    return Pair{mod(k + static_cast<long long>(m), n), 0};
  };
  std::function<std::string(const Pair&)> label = [](const Pair& x) {
    return word({power("a", x.first), x.second ? "b" : ""});
  };
  if (m == 2) {
    label = [](const Pair& x) {
      static const std::array<std::array<const char*, 2>, 4> units{
          {{"1", "j"}, {"i", "k"}, {"-1", "-j"}, {"-i", "-k"}}};
      return std::string(units[x.first][x.second]);
    };
  }
  return group_from_generators(std::move(name), std::vector<Pair>{{1, 0}, {0, 1}}, Pair{0, 0}, mul, label,
                               limits);
}

Group symmetric(std::size_t n, std::string name, const Limits& limits) {
  if (n <= 1) return Group().renamed(std::move(name));
  std::vector<std::string> gens;
  if (n >= 3) {
    std::string cycle = "(";
    for (std::size_t i = 1; i <= n; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
    gens.push_back(cycle + ")");
  }
  gens.push_back("(1 2)");
  return group_from_permutations(gens, n, std::move(name), limits);
}

Group alternating(std::size_t n, std::string name, const Limits& limits) {
  if (n <= 2) return Group().renamed(std::move(name));
  std::vector<std::string> gens;
  for (std::size_t i = 1; i + 2 <= n; ++i)
    gens.push_back("(" + std::to_string(i) + " " + std::to_string(i + 1) + " " + std::to_string(i + 2) + ")");
  return group_from_permutations(gens, n, std::move(name), limits);
}

Group elementary_abelian(std::size_t p, std::size_t k, std::string name, const Limits& limits) {
  using Vec = std::vector<std::size_t>;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Vec e(k, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  auto mul = [p](const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % p;
    return z;
  };
  auto label = [](const Vec& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  };
  return group_from_generators(std::move(name), gens, Vec(k, 0), mul, label, limits);
}

// Upper unitriangular 3x3 matrices over F_3, stored as (a, b, c) for
// [[1, a, c], [0, 1, b], [0, 0, 1]].
Group heisenberg27(std::string name, const Limits& limits) {
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  auto mul = [](const Triple& x, const Triple& y) {
    const auto [a, b, c] = x;
    const auto [d, e, f] = y;
    return Triple{(a + d) % 3, (b + e) % 3, (c + f + a * e) % 3};
  };
  auto label = [](const Triple& x) {
    const auto [a, b, c] = x;
    return word({power("x", a), power("y", b), power("z", c)});
  };
  return group_from_generators(std::move(name), std::vector<Triple>{{1, 0, 0}, {0, 1, 0}}, Triple{0, 0, 0}, mul,
                               label, limits);
}

// a^i b^j with a^9 = b^3 = 1 and b a b^-1 = a^4.
Group metacyclic27(std::string name, const Limits& limits) {
  auto mul = [](const Pair& x, const Pair& y) {
    std::size_t twist = 1;
    for (std::size_t t = 0; t < x.second; ++t) twist *= 4;
    return Pair{(x.first + twist * y.first) % 9, (x.second + y.second) % 3};
  };
  auto label = [](const Pair& x) { return word({power("a", x.first), power("b", x.second)}); };
  return group_from_generators(std::move(name), std::vector<Pair>{{1, 0}, {0, 1}}, Pair{0, 0}, mul, label, limits);
}

struct Recipe {
  char kind;  // 'C','D','Q','S','A','E','H' (X+27), 'M' (X-27)
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t order = 1;
};

std::optional<Recipe> parse(std::string_view name) {
  if (name == "X+8") return Recipe{'D', 4, 0, 8};
  if (name == "X-8") return Recipe{'Q', 2, 0, 8};
  if (name == "X+27") return Recipe{'H', 0, 0, 27};
  if (name == "X-27") return Recipe{'M', 0, 0, 27};
  if (name.empty()) return std::nullopt;
  const char kind = name.front();
  const std::string_view rest = name.substr(1);
  if (kind == 'E') {
    const auto caret = rest.find('^');
    if (caret == std::string_view::npos) return std::nullopt;
    const auto p = parse_number(rest.substr(0, caret));
    const auto k = parse_number(rest.substr(caret + 1));
    if (!p || !k || !is_prime(*p) || *k == 0 || *k > 64) return std::nullopt;
    std::size_t order = 1;
    for (std::size_t i = 0; i < *k && order <= (std::size_t{1} << 40); ++i) order *= *p;
    return Recipe{'E', *p, *k, order};
  }
  const auto v = parse_number(rest);
  if (!v || *v == 0) return std::nullopt;
  switch (kind) {
    case 'C':
      return Recipe{'C', *v, 0, *v};
    case 'D':
      if (*v % 2 != 0) return std::nullopt;
      return Recipe{'D', *v / 2, 0, *v};
    case 'Q':
      if (*v < 8 || (*v & (*v - 1)) != 0) return std::nullopt;
      return Recipe{'Q', *v / 4, 0, *v};
    case 'S':
    case 'A': {
      if (*v > 5) return std::nullopt;
      std::size_t order = 1;
      for (std::size_t i = 2; i <= *v; ++i) order *= i;
      if (kind == 'A' && *v >= 2) order /= 2;
      return Recipe{kind, *v, 0, order};
    }
    default:
      return std::nullopt;
  }
}

Group build(const Recipe& r, std::string name, const Limits& limits) {
  switch (r.kind) {
    case 'C': return cyclic(r.a, std::move(name), limits);
    case 'D': return dihedral(r.a, std::move(name), limits);
    case 'Q': return dicyclic(r.a, std::move(name), limits);
    case 'S': return symmetric(r.a, std::move(name), limits);
    case 'A': return alternating(r.a, std::move(name), limits);
    case 'E': return elementary_abelian(r.a, r.b, std::move(name), limits);
    case 'H': return heisenberg27(std::move(name), limits);
    default: return metacyclic27(std::move(name), limits);
  }
}

}  // namespace

Group catalog_group(std::string_view name, const Limits& limits) {
  const auto recipe = parse(name);
  if (!recipe) throw Error(ErrorCode::UnknownCatalogName, "\"" + std::string(name) + "\"");
  if (recipe->order > limits.order_cap)
    throw Error(ErrorCode::OrderCapExceeded, std::string(name) + " has order " + std::to_string(recipe->order) +
                                                 ", cap is " + std::to_string(limits.order_cap));
  return build(*recipe, std::string(name), limits);
}

bool is_catalog_name(std::string_view name) { return parse(name).has_value(); }

std::vector<std::string> standard_catalog(std::size_t max_order) {
  struct Entry {
    std::size_t order;
    const char* name;
  };
  static const Entry kEntries[] = {
      {1, "C1"},     {2, "C2"},     {3, "C3"},     {4, "C4"},     {4, "E2^2"},   {5, "C5"},     {6, "C6"},
      {6, "D6"},     {6, "S3"},     {7, "C7"},     {8, "C8"},     {8, "D8"},     {8, "E2^3"},   {8, "Q8"},
      {8, "X+8"},    {8, "X-8"},    {9, "C9"},     {9, "E3^2"},   {10, "C10"},   {10, "D10"},   {12, "A4"},
      {12, "C12"},   {12, "D12"},   {14, "D14"},   {16, "C16"},   {16, "D16"},   {16, "E2^4"},  {16, "Q16"},
      {18, "D18"},   {20, "D20"},   {24, "D24"},   {24, "S4"},    {27, "C27"},   {27, "E3^3"},  {27, "X+27"},
      {27, "X-27"},  {32, "C32"},   {32, "D32"},   {32, "E2^5"},  {32, "Q32"},   {36, "D36"},   {60, "A5"},
      {64, "C64"},   {64, "D64"},   {64, "E2^6"},  {64, "Q64"},   {120, "S5"},
  };
  std::vector<std::string> out;
  for (const auto& e : kEntries)
    if (e.order <= max_order) out.emplace_back(e.name);
  return out;
}

}  // namespace cdlat
