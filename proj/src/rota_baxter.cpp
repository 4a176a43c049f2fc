#include "twistpost/rota_baxter.hpp"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "twistpost/config.hpp"
#include "twistpost/error.hpp"

namespace twistpost {

Report verify_rbs(const FiniteGroup& g, const MapTable& b1, const MapTable& b2) {
  const std::size_t n = g.order();
  if (b1.size() != n || b2.size() != n) throw Error(ErrorCode::DimensionMismatch, "B1/B2 size differs from group");
  for (Elem a = 0; a < n; ++a)
    if (b1[a] >= n || b2[a] >= n) throw Error(ErrorCode::InvalidTable, fmt::format("B1/B2 entry {} out of range", a));
  Report r;
  Check& first = r.add("b1_axiom");
  Check& second = r.add("b2_axiom");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem m = g.op(g.op(b1[a], b), b2[a]);
      if (first.ok && g.op(b1[a], b1[b]) != b1[m]) first = {first.name, false, {a, b}, "B1(a)B1(b) != B1(B1(a) b B2(a))"};
      if (second.ok && g.op(b2[b], b2[a]) != b2[m])
        second = {second.name, false, {a, b}, "B2(b)B2(a) != B2(B1(a) b B2(a))"};
    }
  return r;
}

RotaBaxterSystem make_rbs(FiniteGroup g, MapTable b1, MapTable b2) {
  const Report r = verify_rbs(g, b1, b2);
  if (!r.ok()) throw Error(ErrorCode::AxiomViolation, r.failure_message());
  return {std::move(g), std::move(b1), std::move(b2)};
}

TwistedPostGroup rbs_to_tpg(const RotaBaxterSystem& r) {
  const FiniteGroup& g = r.group;
  const std::size_t n = g.order();
  OpTable tri(n);
  MapTable phi(n);
  for (Elem a = 0; a < n; ++a) {
    phi[a] = g.op(r.b1[a], r.b2[a]);
    for (Elem b = 0; b < n; ++b) tri.at(a, b) = g.conjugate(r.b2[a], b);
  }
  try {
    TwistedPostGroup t = TwistedPostGroup::left(g, std::move(tri), std::move(phi));
    if (t.kind() != Kind::LeftTwisted) throw Error(ErrorCode::InternalInconsistency, "induced structure is weak");
    return t;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) throw;
    throw Error(ErrorCode::InternalInconsistency, e.what());
  }
}

TwistedPostGroup rbs_to_right_tpg(const RotaBaxterSystem& r) {
  const FiniteGroup& g = r.group;
  const std::size_t n = g.order();
  OpTable tri_right(n);
  MapTable phi(n);
  for (Elem b = 0; b < n; ++b) {
    phi[b] = g.op(r.b1[b], r.b2[b]);
    for (Elem a = 0; a < n; ++a) tri_right.at(a, b) = g.conjugate(g.inv(r.b1[b]), a);
  }
  try {
    TwistedPostGroup t = TwistedPostGroup::right(g, std::move(tri_right), std::move(phi));
    if (t.kind() != Kind::RightTwisted) throw Error(ErrorCode::InternalInconsistency, "induced structure is weak");
    return t;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) throw;
    throw Error(ErrorCode::InternalInconsistency, e.what());
  }
}

namespace {

struct RbsSearch {
  const FiniteGroup& g;
  const MapTable& phi;
  const std::vector<std::vector<Elem>>& choices;
  std::size_t cap;
  MapTable b1, b2;
  std::vector<RotaBaxterSystem> found;
  bool capped = false;

  // Checks every axiom instance whose three elements a, b, B1(a) b B2(a) are
  // all assigned (index <= k) and which involves k.
  bool consistent(Elem k) const {
    for (Elem a = 0; a <= k; ++a)
      for (Elem b = 0; b <= k; ++b) {
        const Elem m = g.op(g.op(b1[a], b), b2[a]);
        if (m > k || (a != k && b != k && m != k)) continue;
        if (g.op(b1[a], b1[b]) != b1[m] || g.op(b2[b], b2[a]) != b2[m]) return false;
      }
    return true;
  }

  void run(Elem k) {
    if (capped) return;
    if (k == g.order()) {
      if (found.size() == cap) {
        capped = true;
        return;
      }
      found.push_back({g, b1, b2});
      return;
    }
    for (Elem t : choices[k]) {
      b2[k] = t;
      b1[k] = g.op(phi[k], g.inv(t));
      if (consistent(k)) run(k + 1);
      if (capped) return;
    }
  }
};

}  // namespace

Reconstruction reconstruct_rbs(const TwistedPostGroup& t) {
  require_left_twisted(t, "reconstruct_rbs");
  const FiniteGroup& g = t.group();
  const std::size_t n = g.order();
  Reconstruction out;

  std::vector<std::vector<Elem>> choices(n);
  double space = 1;
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      bool match = true;
      for (Elem x = 0; x < n && match; ++x) match = g.conjugate(c, x) == t.act(a, x);
      if (match) choices[a].push_back(c);
    }
    if (choices[a].empty()) {
      out.not_inner = a;
      return out;
    }
    space *= static_cast<double>(choices[a].size());
  }
  if (space > static_cast<double>(limits().reconstruct_space_cap))
    throw Error(ErrorCode::SearchSpaceExceeded,
                fmt::format("coset product has {:.0f} points, cap {}", space, limits().reconstruct_space_cap));

  RbsSearch s{g, t.phi(), choices, limits().reconstruct_cap, MapTable(n), MapTable(n), {}, false};
  s.run(0);
  for (const auto& r : s.found) {
    if (!verify_rbs(g, r.b1, r.b2).ok())
      throw Error(ErrorCode::InternalInconsistency, "reconstructed system fails the axioms");
  }
  std::sort(s.found.begin(), s.found.end(), [](const RotaBaxterSystem& x, const RotaBaxterSystem& y) {
    return std::tie(x.b2, x.b1) < std::tie(y.b2, y.b1);
  });
  out.solutions = std::move(s.found);
  out.capped = s.capped;
  return out;
}

}  // namespace twistpost
