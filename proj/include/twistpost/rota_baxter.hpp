#pragma once

#include <optional>
#include <vector>

#include "twistpost/group.hpp"
#include "twistpost/report.hpp"
#include "twistpost/tpg.hpp"

namespace twistpost {

/// Rota-Baxter system of groups:
///   B1(a) B1(b) = B1(B1(a) b B2(a)),   B2(b) B2(a) = B2(B1(a) b B2(a)).
struct RotaBaxterSystem {
  FiniteGroup group;
  MapTable b1;
  MapTable b2;

  friend bool operator==(const RotaBaxterSystem&, const RotaBaxterSystem&) = default;
};

/// Checks b1_axiom and b2_axiom, witnesses (a, b).
Report verify_rbs(const FiniteGroup& g, const MapTable& b1, const MapTable& b2);

/// Throws AxiomViolation with the first failing check.
RotaBaxterSystem make_rbs(FiniteGroup g, MapTable b1, MapTable b2);

/// a|>b = B2(a)^{-1} b B2(a), Phi(a) = B1(a) B2(a); always LeftTwisted.
TwistedPostGroup rbs_to_tpg(const RotaBaxterSystem& r);

/// a<|b = B1(b) a B1(b)^{-1}, Phi(b) = B1(b) B2(b), so that
/// a o b = B1(b) a B2(b); always RightTwisted.
TwistedPostGroup rbs_to_right_tpg(const RotaBaxterSystem& r);

struct Reconstruction {
  std::vector<RotaBaxterSystem> solutions;  // sorted by (b2, b1)
  std::optional<Elem> not_inner;            // first a with L_a not inner
  bool capped = false;                      // stopped at limits().reconstruct_cap
};

/// Searches B2 over the product of T_a = { t : t^{-1} x t = a|>x }, in
/// lexicographic (a, t) order, with B1(a) = Phi(a) B2(a)^{-1}. T_a is a coset
/// of the center, so the answer is in general not unique.
/// Throws SearchSpaceExceeded when the product of |T_a| exceeds
/// limits().reconstruct_space_cap.
Reconstruction reconstruct_rbs(const TwistedPostGroup& t);

}  // namespace twistpost
