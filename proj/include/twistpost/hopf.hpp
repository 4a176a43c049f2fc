#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twistpost/rational.hpp"
#include "twistpost/report.hpp"
#include "twistpost/tpg.hpp"

namespace twistpost {

/// Sparse element of Q[G]; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  static GroupAlgebraElement basis(Elem g) { return term(g, 1); }
  static GroupAlgebraElement term(Elem g, const Rational& q);

  const std::map<Elem, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(Elem g) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// The g with x = 1 g, if x is a single group element.
  std::optional<Elem> as_basis() const;

  GroupAlgebraElement& add(Elem g, const Rational& q);
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const Rational& q) const;

  friend bool operator==(const GroupAlgebraElement& l, const GroupAlgebraElement& r) { return l.coeffs_ == r.coeffs_; }

 private:
  std::map<Elem, Rational> coeffs_;
};

/// Sparse element of Q[G] (x) Q[G].
using TensorElement = std::map<std::pair<Elem, Elem>, Rational>;

/// Q[G] with the linear extensions of a twisted post group with Phi(1) = 1.
/// On basis elements: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
class GroupAlgebraTPHA {
 public:
  const TwistedPostGroup& base() const { return base_; }
  std::size_t dim() const { return base_.order(); }

  GroupAlgebraElement product(const GroupAlgebraElement& x, const GroupAlgebraElement& y) const;
  GroupAlgebraElement act(const GroupAlgebraElement& x, const GroupAlgebraElement& y) const;
  /// x o y = Phi(x_1)(x_2 |> y)
  GroupAlgebraElement circ(const GroupAlgebraElement& x, const GroupAlgebraElement& y) const;
  GroupAlgebraElement phi(const GroupAlgebraElement& x) const;
  GroupAlgebraElement antipode(const GroupAlgebraElement& x) const;
  /// T_g = (L_g)^{-1} extended linearly in y.
  GroupAlgebraElement inverse_act(Elem g, const GroupAlgebraElement& y) const;
  TensorElement coproduct(const GroupAlgebraElement& x) const;
  Rational counit(const GroupAlgebraElement& x) const;

  /// TPHA1..TPHA3, T_inverse, Delta/eps compatibility with o, and the basis
  /// lemmas (unit_action, action_on_unit, action_commutes_with_S,
  /// phi_idempotent, phi_absorbed_by_action), as computed by linearize.
  const Report& checks() const { return checks_; }

 private:
  friend GroupAlgebraTPHA linearize(const TwistedPostGroup& t);
  explicit GroupAlgebraTPHA(TwistedPostGroup t) : base_(std::move(t)) {}
  TwistedPostGroup base_;
  std::vector<MapTable> inverse_;
  Report checks_;
};

/// Throws CocycleNotNormalized when Phi(1) != 1 and PreconditionFailed
/// unless the structure is LeftTwisted; failed basis checks are reported in
/// checks(), not thrown.
GroupAlgebraTPHA linearize(const TwistedPostGroup& t);

/// Hopf truss g o y = Phi(g)(g |> y): checks the cocycle law
/// g o (yz) = (g o y) S(Phi(g)) (g o z) and that S(Phi(g))(g o y)
/// reproduces |> entrywise.
Report hopf_truss_roundtrip(const GroupAlgebraTPHA& h);

struct SubAdjacentHopf {
  std::vector<Elem> basis;  // Phi(G), sorted
  MapTable antipode;        // S_|>(g) on basis elements, identity elsewhere
  bool commutative = false; // informational
  Report checks;            // circ_closed, unit, antipode_left, antipode_right,
                            // antipode_is_dagger, antipode_involutive,
                            // cocommutative
};

SubAdjacentHopf sub_adjacent_hopf(const GroupAlgebraTPHA& h);

struct GroupLikes {
  std::vector<Elem> elements;  // basis elements with Delta(x) = x (x) x, eps(x) = 1
  std::optional<TwistedPostGroup> rebuilt;
  Report checks;               // all_basis_group_like, closed, matches_base
};

GroupLikes group_likes(const GroupAlgebraTPHA& h);

}  // namespace twistpost
