#include "twistpost/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "twistpost/config.hpp"
#include "twistpost/error.hpp"

namespace twistpost {

namespace {

OpTable relabel_table(const OpTable& t, const MapTable& s) {
  OpTable out(t.order());
  for (Elem a = 0; a < t.order(); ++a)
    for (Elem b = 0; b < t.order(); ++b) out.at(s[a], s[b]) = s[t(a, b)];
  return out;
}

// Relabelings that bring the group table to its least form, memoized per
// group table.
const std::vector<MapTable>& minimizing_relabelings(const OpTable& mul) {
  static std::mutex mu;
  static std::map<OpTable, std::vector<MapTable>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(mul);
  if (it != cache.end()) return it->second;

  const std::size_t n = mul.order();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<OpTable> best;
  std::vector<MapTable> out;
  do {
    const MapTable s(perm);
    OpTable t = relabel_table(mul, s);
    if (!best || t < *best) {
      best = std::move(t);
      out.clear();
      out.push_back(s);
    } else if (t == *best) {
      out.push_back(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(mul, std::move(out)).first->second;
}

}  // namespace

CanonicalForm relabel(const FiniteGroup& g, const std::optional<OpTable>& tri, const std::optional<OpTable>& tri_right,
                      const MapTable& phi, const MapTable& s) {
  if (!s.is_bijective() || s.size() != g.order()) throw Error(ErrorCode::PreconditionFailed, "relabeling is not a permutation");
  CanonicalForm f;
  f.mul = relabel_table(g.mul(), s);
  if (tri) f.tri = relabel_table(*tri, s);
  if (tri_right) f.tri_right = relabel_table(*tri_right, s);
  f.phi = MapTable(phi.size());
  for (Elem a = 0; a < phi.size(); ++a) f.phi[s[a]] = s[phi[a]];
  f.relabeling = s;
  return f;
}

CanonicalForm canonical_form(const TwistedPostGroup& t) {
  const FiniteGroup& g = t.group();
  std::optional<OpTable> tri, tri_right;
  if (t.has_left()) tri = t.tri();
  if (t.has_right()) tri_right = t.tri_right();

  std::vector<MapTable> candidates;
  if (g.order() <= limits().canonical_exhaustive_max) {
    candidates = minimizing_relabelings(g.mul());
  } else {
    candidates = automorphisms(g);
  }
  std::optional<CanonicalForm> best;
  for (const auto& s : candidates) {
    CanonicalForm f = relabel(g, tri, tri_right, t.phi(), s);
    if (!best || f < *best) best = std::move(f);
  }
  return *best;
}

}  // namespace twistpost
