#include "twistpost/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "twistpost/config.hpp"
#include "twistpost/error.hpp"

namespace twistpost {

FiniteGroup make_group(const OpTable& mul, std::vector<std::string> labels) {
  const std::size_t n = mul.order();
  if (n == 0) throw Error(ErrorCode::InvalidTable, "empty table");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (mul.raw()[i] >= n) {
      throw Error(ErrorCode::InvalidTable, fmt::format("entry [{}][{}] out of range", i / n, i % n));
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, fmt::format("{} labels for {} elements", labels.size(), n));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::NotAssociative, fmt::format("({0}*{1})*{2} != {0}*({1}*{2})", a, b, c));

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided neutral element");

  MapTable inv(n);
  for (Elem a = 0; a < n; ++a) {
    std::optional<Elem> found;
    for (Elem b = 0; b < n && !found; ++b)
      if (mul(a, b) == *identity && mul(b, a) == *identity) found = b;
    if (!found) throw Error(ErrorCode::NoInverse, fmt::format("element {} has no inverse", a));
    inv[a] = *found;
  }

  FiniteGroup g;
  g.mul_ = mul;
  g.identity_ = *identity;
  g.inv_ = std::move(inv);
  g.labels_ = std::move(labels);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = op(x, a)) ++k;
  return k;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnsupportedOrder, "cyclic(0)");
  if (n > limits().max_group_order)
    throw Error(ErrorCode::UnsupportedOrder, fmt::format("cyclic({}) exceeds {}", n, limits().max_group_order));
  OpTable t(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) t.at(i, j) = static_cast<Elem>((i + j) % n);
  return make_group(t);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnsupportedOrder, "dihedral(0)");
  if (2 * n > limits().max_group_order)
    throw Error(ErrorCode::UnsupportedOrder, fmt::format("dihedral({}) exceeds {}", n, limits().max_group_order));
  // r^i s^f with s r = r^{-1} s; index = f*n + i
  const std::size_t m = 2 * n;
  OpTable t(m);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      const std::size_t xi = x % n, xf = x / n, yi = y % n, yf = y / n;
      // (r^xi s^xf)(r^yi s^yf) = r^{xi + (-1)^xf yi} s^{xf+yf}
      const std::size_t i = xf ? (xi + n - yi) % n : (xi + yi) % n;
      const std::size_t f = (xf + yf) % 2;
      t.at(x, y) = static_cast<Elem>(f * n + i);
    }
  }
  return make_group(t);
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorCode::UnsupportedOrder, fmt::format("symmetric({}) needs 1 <= n <= 5", n));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  // (p*q)(i) = p(q(i)): apply q first.
  OpTable t(m);
  std::vector<std::string> labels;
  for (Elem a = 0; a < m; ++a) {
    std::string lab;
    for (int v : perms[a]) lab += std::to_string(v + 1);
    labels.push_back(lab);
    for (Elem b = 0; b < m; ++b) {
      std::vector<int> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
      t.at(a, b) = index_of(r);
    }
  }
  return make_group(t, std::move(labels));
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw Error(ErrorCode::ParseError, "direct_product needs at least one factor");
  std::size_t m = 1;
  for (const auto& f : factors) {
    m *= f.order();
    if (m > limits().max_group_order)
      throw Error(ErrorCode::UnsupportedOrder, fmt::format("direct product exceeds {}", limits().max_group_order));
  }
  auto decode = [&](Elem x) {
    std::vector<Elem> coords(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      coords[k] = static_cast<Elem>(x % factors[k].order());
      x /= static_cast<Elem>(factors[k].order());
    }
    return coords;
  };
  auto encode = [&](const std::vector<Elem>& coords) {
    Elem x = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) x = static_cast<Elem>(x * factors[k].order() + coords[k]);
    return x;
  };
  OpTable t(m);
  for (Elem a = 0; a < m; ++a) {
    const auto ca = decode(a);
    for (Elem b = 0; b < m; ++b) {
      const auto cb = decode(b);
      std::vector<Elem> c(factors.size());
      for (std::size_t k = 0; k < factors.size(); ++k) c[k] = factors[k].op(ca[k], cb[k]);
      t.at(a, b) = encode(c);
    }
  }
  return make_group(t);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  FiniteGroup parse() {
    FiniteGroup g = group();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  FiniteGroup group() {
    const std::string name = ident();
    if (name == "klein_four") return direct_product({cyclic_group(2), cyclic_group(2)});
    if (name == "trivial") return cyclic_group(1);
    expect('(');
    if (name == "direct_product") {
      std::vector<FiniteGroup> factors{group()};
      while (peek() == ',') {
        ++pos_;
        factors.push_back(group());
      }
      expect(')');
      return direct_product(factors);
    }
    const std::size_t n = number();
    expect(')');
    if (name == "cyclic") return cyclic_group(n);
    if (name == "dihedral") return dihedral_group(n);
    if (name == "symmetric") return symmetric_group(n);
    fail("unknown group '" + name + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a group name");
    return s_.substr(start, pos_ - start);
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, fmt::format("group spec '{}' at {}: {}", s_, pos_, what));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup builtin_group(const std::string& spec) { return SpecParser(spec).parse(); }

HomomorphismCheck is_homomorphism(const MapTable& f, const FiniteGroup& src, const FiniteGroup& dst) {
  if (f.size() != src.order())
    throw Error(ErrorCode::DimensionMismatch, fmt::format("map has {} entries, source order {}", f.size(), src.order()));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= dst.order()) throw Error(ErrorCode::InvalidTable, fmt::format("map entry [{}] out of range", i));
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (f[src.op(a, b)] != dst.op(f[a], f[b])) return {false, Pair{a, b}};
  return {};
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> in_span(n, false);
  in_span[g.identity()] = true;
  std::vector<Elem> gens;
  for (Elem x = 0; x < n; ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    // recompute the span by closure under right multiplication with gens
    std::vector<Elem> frontier;
    for (Elem y = 0; y < n; ++y)
      if (in_span[y]) frontier.push_back(y);
    while (!frontier.empty()) {
      const Elem y = frontier.back();
      frontier.pop_back();
      for (Elem s : gens) {
        const Elem z = g.op(y, s);
        if (!in_span[z]) {
          in_span[z] = true;
          frontier.push_back(z);
        }
      }
    }
  }
  return gens;
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Extends f from the assigned generators by right multiplication; false on a
// conflict.
bool close_images(const FiniteGroup& g, const std::vector<Elem>& gens, std::size_t assigned,
                  std::vector<Elem>& f) {
  std::vector<Elem> frontier;
  for (Elem x = 0; x < g.order(); ++x)
    if (f[x] != kUnset) frontier.push_back(x);
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < assigned; ++k) {
      const Elem y = g.op(x, gens[k]);
      const Elem img = g.op(f[x], f[gens[k]]);
      if (f[y] == kUnset) {
        f[y] = img;
        frontier.push_back(y);
      } else if (f[y] != img) {
        return false;
      }
    }
  }
  return true;
}

void search_homs(const FiniteGroup& g, const std::vector<Elem>& gens, const std::vector<std::size_t>& orders,
                 bool bijective, std::size_t k, std::vector<Elem> f, std::vector<MapTable>& out) {
  if (k == gens.size()) {
    MapTable m(std::move(f));
    if (!bijective || m.is_bijective()) out.push_back(std::move(m));
    return;
  }
  const std::size_t want = g.element_order(gens[k]);
  for (Elem img = 0; img < g.order(); ++img) {
    const std::size_t o = orders[img];
    if (bijective ? o != want : want % o != 0) continue;
    std::vector<Elem> next = f;
    if (next[gens[k]] != kUnset && next[gens[k]] != img) continue;
    next[gens[k]] = img;
    if (!close_images(g, gens, k + 1, next)) continue;
    search_homs(g, gens, orders, bijective, k + 1, std::move(next), out);
  }
}

std::vector<MapTable> hom_search(const FiniteGroup& g, bool bijective) {
  if (g.order() > limits().automorphism_bound)
    throw Error(ErrorCode::BoundExceeded,
                fmt::format("order {} exceeds enumeration bound {}", g.order(), limits().automorphism_bound));
  const auto gens = generating_set(g);
  std::vector<std::size_t> orders(g.order());
  for (Elem x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::vector<Elem> f(g.order(), kUnset);
  f[g.identity()] = g.identity();
  std::vector<MapTable> out;
  search_homs(g, gens, orders, bijective, 0, std::move(f), out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<MapTable> endomorphisms(const FiniteGroup& g) { return hom_search(g, false); }

std::vector<MapTable> automorphisms(const FiniteGroup& g, AutSearch mode) {
  if (mode == AutSearch::Backtrack) return hom_search(g, true);
  if (g.order() > limits().brute_force_oracle_max)
    throw Error(ErrorCode::BoundExceeded, fmt::format("brute-force automorphism search limited to order {}",
                                                      limits().brute_force_oracle_max));
  std::vector<Elem> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<MapTable> out;
  do {
    MapTable m(p);
    if (is_homomorphism(m, g, g).ok) out.push_back(m);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<InnerAutomorphism> inner_automorphisms(const FiniteGroup& g) {
  std::vector<InnerAutomorphism> out;
  for (Elem t = 0; t < g.order(); ++t) {
    MapTable m(g.order());
    for (Elem a = 0; a < g.order(); ++a) m[a] = g.conjugate(t, a);
    out.push_back({t, std::move(m)});
  }
  return out;
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem t = 0; t < g.order(); ++t) {
    bool central = true;
    for (Elem a = 0; a < g.order() && central; ++a) central = g.op(t, a) == g.op(a, t);
    if (central) z.push_back(t);
  }
  return z;
}

}  // namespace twistpost
