#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistpost/group.hpp"
#include "twistpost/report.hpp"

namespace twistpost {

enum class Kind { LeftTwisted, LeftWeak, RightTwisted, RightWeak, TwoSidedTwisted, TwoSidedWeak };

const char* to_string(Kind k);
std::optional<Kind> kind_from_string(const std::string& s);

/// Per-axiom classification of one chirality.
///
/// Left:  L1 every b -> a|>b is an endomorphism, L2 it is bijective,
///        L3 (a o b)|>c = a|>(b|>c), L4 Phi(a o b) = a o Phi(b),
///        with a o b = Phi(a) (a|>b).
/// Right: R1 every a -> a<|b is an endomorphism, R2 bijective,
///        R3 a<|(b o c) = (a<|b)<|c, R4 Phi(a o b) = Phi(a) o b,
///        with a o b = (a<|b) Phi(b).
struct SideReport {
  bool left = true;
  Report axioms;  // four checks in the order above

  bool endomorphisms() const { return axioms.checks[0].ok; }
  bool bijective() const { return axioms.checks[1].ok; }
  bool weak() const { return axioms.checks[0].ok && axioms.checks[2].ok && axioms.checks[3].ok; }
  bool twisted() const { return weak() && bijective(); }
};

struct TwoSidedReport {
  SideReport left;
  SideReport right;
  Check same_circ;
  bool abelian = false;
  std::optional<Kind> kind;
};

/// Throws DimensionMismatch when table sizes disagree with the group.
SideReport classify(const FiniteGroup& g, const OpTable& tri, const MapTable& phi);
SideReport classify_right(const FiniteGroup& g, const OpTable& tri_right, const MapTable& phi);
TwoSidedReport classify_two_sided(const FiniteGroup& g, const OpTable& tri, const OpTable& tri_right,
                                  const MapTable& phi);

OpTable left_circ(const FiniteGroup& g, const OpTable& tri, const MapTable& phi);
OpTable right_circ(const FiniteGroup& g, const OpTable& tri_right, const MapTable& phi);

/// A verified (weak / left / right / two-sided) twisted post group. The kind is
/// always computed from the tables.
class TwistedPostGroup {
 public:
  /// Throws NotATwistedPostGroup (with the failing axiom) if the left axioms
  /// fail even in weak form.
  static TwistedPostGroup left(FiniteGroup g, OpTable tri, MapTable phi);
  static TwistedPostGroup right(FiniteGroup g, OpTable tri_right, MapTable phi);
  static TwistedPostGroup two_sided(FiniteGroup g, OpTable tri, OpTable tri_right, MapTable phi);
  /// Picks the strongest kind the tables satisfy; two-sided when both tables
  /// are present and agree on o.
  static TwistedPostGroup from_tables(FiniteGroup g, std::optional<OpTable> tri, std::optional<OpTable> tri_right,
                                      MapTable phi);

  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  Kind kind() const { return kind_; }
  const MapTable& phi() const { return phi_; }
  bool has_left() const { return tri_.has_value(); }
  bool has_right() const { return tri_right_.has_value(); }
  /// Throws PreconditionFailed if the structure has no left action.
  const OpTable& tri() const;
  const OpTable& tri_right() const;

  bool is_left_kind() const;
  bool is_twisted() const;
  bool is_two_sided() const { return kind_ == Kind::TwoSidedTwisted || kind_ == Kind::TwoSidedWeak; }

  Elem act(Elem a, Elem b) const { return (*tri_)(a, b); }
  /// Left sub-adjacent product Phi(a) (a|>b).
  Elem circ(Elem a, Elem b) const { return group_.op(phi_[a], (*tri_)(a, b)); }
  MapTable left_mult(Elem a) const;

  friend bool operator==(const TwistedPostGroup&, const TwistedPostGroup&) = default;

 private:
  TwistedPostGroup() = default;
  FiniteGroup group_;
  std::optional<OpTable> tri_;
  std::optional<OpTable> tri_right_;
  MapTable phi_;
  Kind kind_ = Kind::LeftWeak;
};

/// Throws PreconditionFailed unless t is LeftTwisted or TwoSidedTwisted.
void require_left_twisted(const TwistedPostGroup& t, const char* op);

/// Sub-adjacent data. e_a = (L_a)^{-1}(Phi(a)^{-1} a) and
/// a^dagger = (L_a)^{-1}(Phi(a)^{-1} e_a); entries are nullopt where L_a is not
/// invertible (weak structures), listed in `undefined`.
struct SubAdjacent {
  OpTable circ;
  PartialMap e;
  PartialMap dagger;
  std::vector<Elem> undefined;

  Elem e_at(Elem a) const { return *e[a]; }
  Elem dagger_at(Elem a) const { return *dagger[a]; }
};

SubAdjacent sub_adjacent(const TwistedPostGroup& t);

/// Exhaustive checks of the laws every twisted post group obeys:
/// circ_associative, left_cancellative, right_local_identity (a o e_a = a),
/// local_inverse (a o a^dagger = e_a), phi_kills_idempotents (Phi(e_a) = 1),
/// left_identity (e_a o b = b), idempotent (e_a o e_a = e_a),
/// idempotent_shift (e_{a o b} = e_b), local_identity_defined.
/// Requires LeftTwisted.
Report check_subadjacent_laws(const TwistedPostGroup& t);

/// Same laws on raw tables with no axiom check first, for probing corrupted
/// inputs.
Report subadjacent_laws(const FiniteGroup& g, const OpTable& tri, const MapTable& phi);

/// G_a = { b o e_a } as a group under o with identity e_a.
struct Component {
  Elem idempotent;
  std::vector<Elem> members;  // sorted
  FiniteGroup group;          // on indices into `members`
  Report checks;
};

Component component(const TwistedPostGroup& t, Elem a);

struct Decomposition {
  std::vector<std::vector<Elem>> components;  // distinct G_a, ordered by smallest member
  std::vector<Elem> idempotents;              // K = { e_a }, sorted
  std::vector<Elem> sub_adjacent_group;       // G_1, sorted
  MapTable psi_group;                         // a -> a o e_1
  MapTable psi_idempotent;                    // a -> e_a
  Report checks;
};

/// Partition into the G_a, the semigroup isomorphism (G, o) -> (G_1 x K, *)
/// with (a1,k1)*(a2,k2) = (a1 o a2, k2), and the component isomorphisms
/// x -> x o e_b. All claims are verified exhaustively into `checks`.
Decomposition decompose(const TwistedPostGroup& t);

/// Phi o Phi = Phi iff Phi(1) = 1; when idempotent also a|>b = Phi(a)|>b.
Report cocycle_lemmas(const TwistedPostGroup& t);

/// Checks F against the group product, |> and Phi; when those pass also
/// confirms F(a o b) = F(a) o F(b), throwing InternalInconsistency if not.
Report tpg_homomorphism_check(const MapTable& f, const TwistedPostGroup& src, const TwistedPostGroup& dst);

}  // namespace twistpost
