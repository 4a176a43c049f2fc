#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twistpost/group.hpp"
#include "twistpost/report.hpp"
#include "twistpost/tpg.hpp"

namespace twistpost {

enum class BraceSide { Left, Right, TwoSided };

const char* to_string(BraceSide s);
std::optional<BraceSide> brace_side_from_string(const std::string& s);

/// (G, ., o) with (G, o) a group and, per side,
///   left:  a o (b c) = (a o b) a^{-1} (a o c)
///   right: (a b) o c = (a o c) c^{-1} (b o c)
struct SkewBrace {
  FiniteGroup group;
  OpTable circ;
  BraceSide side = BraceSide::Left;

  friend bool operator==(const SkewBrace&, const SkewBrace&) = default;
};

/// Checks circ_group, then left_brace_law and/or right_brace_law.
Report verify_brace(const FiniteGroup& g, const OpTable& circ, BraceSide side);
SkewBrace make_brace(FiniteGroup g, OpTable circ, BraceSide side);

/// a|>b = a^{-1}(a o b), a<|b = (a o b) b^{-1}, Phi = id; one or both
/// chiralities depending on the side.
TwistedPostGroup brace_to_tpg(const SkewBrace& b);

/// a |>> b = (a o 1^dagger) |> b, Psi(a) = Phi(a o 1^dagger). The result is a
/// left structure with idempotent cocycle.
TwistedPostGroup idempotent_transform(const TwistedPostGroup& t);

/// a . b = (a o 1^dagger) o b, checked against Psi(a)(a |>> b).
/// Throws CocycleNotSurjective unless Phi is onto.
SkewBrace to_skew_brace(const TwistedPostGroup& t);

/// Two-sided brace from a TwoSidedTwisted structure. Also checks that
/// (G, o) is a group with identity e_1; throws InternalInconsistency if any
/// of this fails.
SkewBrace two_sided_brace(const TwistedPostGroup& t);

/// Nonunital ring (R, +, *) where every a has b with a + b + a*b = 0.
struct RadicalRing {
  FiniteGroup add;
  OpTable star;
  MapTable radical_witness;  // smallest such b for each a

  friend bool operator==(const RadicalRing&, const RadicalRing&) = default;
};

/// Checks additive_abelian_group, star_associative, left_distributive,
/// right_distributive, radical.
Report verify_radical_ring(const OpTable& add, const OpTable& star);
RadicalRing make_radical_ring(const OpTable& add, const OpTable& star);

/// a * b = a . b - a - b. Needs an abelian TwoSidedTwisted structure.
RadicalRing to_radical_ring(const TwistedPostGroup& t);

/// For abelian two-sided structures: (G, +, o) is a nonunital ring iff
/// Phi = 0, and in the twisted case Phi = 0 iff |G| = 1.
Report trivial_cocycle_check(const TwistedPostGroup& t);

/// r : X x X -> X x X, stored at index a * n + b.
struct YBESolution {
  std::size_t n = 0;
  std::vector<std::pair<Elem, Elem>> r;

  std::pair<Elem, Elem> operator()(Elem a, Elem b) const { return r[a * n + b]; }
  friend bool operator==(const YBESolution&, const YBESolution&) = default;
};

/// Checks bijective, braid_relation (all n^3 triples), left_nondegenerate,
/// right_nondegenerate.
Report verify_ybe(const YBESolution& s);

/// r(a,b) = (a |>> b, (L_{a |>> b})^{-1}((a . b)^{-1} a (a . b))).
/// Throws CocycleNotSurjective, or InternalInconsistency if the result fails
/// verify_ybe.
YBESolution yang_baxter_map(const TwistedPostGroup& t);

}  // namespace twistpost
