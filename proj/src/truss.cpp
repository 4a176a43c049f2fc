#include "twistpost/truss.hpp"

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

Report verify_truss(const FiniteGroup& g, const OpTable& circ, const MapTable& phi, bool two_sided) {
  const std::size_t n = g.order();
  if (circ.order() != n || phi.size() != n)
    throw Error(ErrorCode::DimensionMismatch, fmt::format("group order {}, circ {}, phi {}", n, circ.order(), phi.size()));
  Report r;

  Check& assoc = r.add("circ_associative");
  for (Elem a = 0; a < n && assoc.ok; ++a)
    for (Elem b = 0; b < n && assoc.ok; ++b)
      for (Elem c = 0; c < n && assoc.ok; ++c)
        if (circ(circ(a, b), c) != circ(a, circ(b, c))) assoc = {assoc.name, false, {a, b, c}, "(a o b) o c != a o (b o c)"};

  Check& left = r.add("left_distributive");
  for (Elem a = 0; a < n && left.ok; ++a) {
    const Elem pinv = g.inv(phi[a]);
    for (Elem b = 0; b < n && left.ok; ++b)
      for (Elem c = 0; c < n && left.ok; ++c)
        if (circ(a, g.op(b, c)) != g.op(g.op(circ(a, b), pinv), circ(a, c)))
          left = {left.name, false, {a, b, c}, "a o (bc) != (a o b) Phi(a)^-1 (a o c)"};
  }

  if (two_sided) {
    r.add("abelian", g.is_abelian());
    Check& right = r.add("right_distributive");
    for (Elem a = 0; a < n && right.ok; ++a)
      for (Elem b = 0; b < n && right.ok; ++b)
        for (Elem c = 0; c < n && right.ok; ++c)
          if (circ(g.op(a, b), c) != g.op(g.op(circ(a, c), g.inv(phi[c])), circ(b, c)))
            right = {right.name, false, {a, b, c}, "(ab) o c != (a o c) Phi(c)^-1 (b o c)"};
  }
  return r;
}

MapTable infer_cocycle(const FiniteGroup& g, const OpTable& circ) {
  if (circ.order() != g.order()) throw Error(ErrorCode::DimensionMismatch, "circ table size");
  MapTable phi(g.order());
  for (Elem a = 0; a < g.order(); ++a) phi[a] = circ(a, g.identity());
  return phi;
}

SkewTruss make_truss(FiniteGroup g, OpTable circ, MapTable phi, bool two_sided) {
  const Report r = verify_truss(g, circ, phi, two_sided);
  if (!r.ok()) throw Error(ErrorCode::AxiomViolation, r.failure_message());
  return {std::move(g), std::move(circ), std::move(phi), two_sided};
}

SkewTruss tpg_to_truss(const TwistedPostGroup& t) {
  if (!t.is_left_kind()) throw Error(ErrorCode::PreconditionFailed, "tpg_to_truss needs a left structure");
  const bool two_sided = t.is_two_sided() && t.group().is_abelian();
  OpTable circ = left_circ(t.group(), t.tri(), t.phi());
  const Report r = verify_truss(t.group(), circ, t.phi(), two_sided);
  if (!r.ok()) throw Error(ErrorCode::InternalInconsistency, "sub-adjacent truss: " + r.failure_message());
  return {t.group(), std::move(circ), t.phi(), two_sided};
}

TwistedPostGroup truss_to_weak_tpg(const SkewTruss& s) {
  const FiniteGroup& g = s.group;
  OpTable tri(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) tri.at(a, b) = g.op(g.inv(s.phi[a]), s.circ(a, b));
  try {
    return TwistedPostGroup::left(g, std::move(tri), s.phi);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalInconsistency, fmt::format("truss does not yield a structure: {}", e.what()));
  }
}

bool roundtrip_check(const SkewTruss& s) {
  const SkewTruss back = tpg_to_truss(truss_to_weak_tpg(s));
  return back.circ == s.circ && back.phi == s.phi;
}

bool roundtrip_check(const TwistedPostGroup& t) {
  const TwistedPostGroup back = truss_to_weak_tpg(tpg_to_truss(t));
  return back.tri() == t.tri() && back.phi() == t.phi();
}

DivisibilityCheck is_right_divisible(const SkewTruss& s) {
  const std::size_t n = s.group.order();
  for (Elem a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (Elem t = 0; t < n; ++t) {
      if (seen[s.circ(a, t)]) return {false, a};
      seen[s.circ(a, t)] = true;
    }
  }
  return {};
}

TrussHomomorphismCheck truss_homomorphism_check(const MapTable& f, const SkewTruss& src, const SkewTruss& dst) {
  TrussHomomorphismCheck out;
  const auto hom = is_homomorphism(f, src.group, dst.group);
  out.report.add("group_homomorphism", hom.ok,
                 hom.witness ? std::vector<Elem>{hom.witness->a, hom.witness->b} : std::vector<Elem>{});
  Check& circ = out.report.add("circ_compatible");
  const std::size_t n = src.group.order();
  for (Elem a = 0; a < n && circ.ok; ++a)
    for (Elem b = 0; b < n && circ.ok; ++b)
      if (f[src.circ(a, b)] != dst.circ(f[a], f[b])) circ = {circ.name, false, {a, b}, "F(a o b) != F(a) o F(b)"};
  for (Elem a = 0; a < n && out.phi_compatible; ++a)
    if (f[src.phi[a]] != dst.phi[f[a]]) {
      out.phi_compatible = false;
      out.phi_witness = a;
    }
  return out;
}

}  // namespace twistpost
