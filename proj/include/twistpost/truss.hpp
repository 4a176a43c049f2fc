#pragma once

#include <optional>

#include "twistpost/group.hpp"
#include "twistpost/report.hpp"
#include "twistpost/tpg.hpp"

namespace twistpost {

/// Skew truss (G, ., o, Phi): (G, o) a semigroup with
///   a o (b c) = (a o b) Phi(a)^{-1} (a o c).
/// Two-sided trusses live on abelian groups and also satisfy
///   (a b) o c = (a o c) Phi(c)^{-1} (b o c).
struct SkewTruss {
  FiniteGroup group;
  OpTable circ;
  MapTable phi;
  bool two_sided = false;

  friend bool operator==(const SkewTruss&, const SkewTruss&) = default;
};

/// Checks circ_associative and left_distributive; with two_sided also
/// abelian and right_distributive.
Report verify_truss(const FiniteGroup& g, const OpTable& circ, const MapTable& phi, bool two_sided = false);

/// Phi(a) = a o 1 is the only candidate (set b = c = 1 in the distributive
/// law), so the inferred cocycle is always unique; the returned truss may
/// still fail verification.
MapTable infer_cocycle(const FiniteGroup& g, const OpTable& circ);

/// Throws AxiomViolation with the first failing check.
SkewTruss make_truss(FiniteGroup g, OpTable circ, MapTable phi, bool two_sided = false);

/// The sub-adjacent product of a left (weak) structure is a truss with the
/// same cocycle. Two-sided when the input is two-sided on an abelian group.
SkewTruss tpg_to_truss(const TwistedPostGroup& t);

/// a|>b = Phi(a)^{-1} (a o b); the result is at least LeftWeak.
TwistedPostGroup truss_to_weak_tpg(const SkewTruss& s);

/// Convert and convert back; true iff every table is reproduced entrywise.
/// For structures the comparison covers the left data (|>, Phi).
bool roundtrip_check(const SkewTruss& s);
bool roundtrip_check(const TwistedPostGroup& t);

struct DivisibilityCheck {
  bool ok = true;
  std::optional<Elem> witness;  // first row of o that is not a permutation
};

/// Every equation a o t = b has exactly one solution t.
DivisibilityCheck is_right_divisible(const SkewTruss& s);

struct TrussHomomorphismCheck {
  Report report;              // group_homomorphism, circ_compatible
  bool phi_compatible = true; // reported apart from the verdict
  std::optional<Elem> phi_witness;

  bool ok() const { return report.ok(); }
};

TrussHomomorphismCheck truss_homomorphism_check(const MapTable& f, const SkewTruss& src, const SkewTruss& dst);

}  // namespace twistpost
