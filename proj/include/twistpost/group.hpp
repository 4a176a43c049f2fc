#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistpost/table.hpp"

namespace twistpost {

/// A validated finite group on {0..n-1}. Immutable after construction.
///
/// The identity is located by scan, so it need not be element 0.
class FiniteGroup {
 public:
  std::size_t order() const { return mul_.order(); }
  Elem op(Elem a, Elem b) const { return mul_(a, b); }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const { return identity_; }
  const OpTable& mul() const { return mul_; }
  const MapTable& inverses() const { return inv_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;
  std::size_t element_order(Elem a) const;
  /// a^{-1} b a
  Elem conjugate(Elem t, Elem a) const { return op(op(inv(t), a), t); }

  friend bool operator==(const FiniteGroup& l, const FiniteGroup& r) { return l.mul_ == r.mul_; }

 private:
  friend FiniteGroup make_group(const OpTable&, std::vector<std::string>);
  OpTable mul_;
  Elem identity_ = 0;
  MapTable inv_;
  std::vector<std::string> labels_;
};

/// Validates `mul` as a group table. Checks run in the order: entry range,
/// associativity, identity, inverses; the first failure throws with the
/// lexicographically minimal witness.
FiniteGroup make_group(const OpTable& mul, std::vector<std::string> labels = {});

/// Builtin groups from a spec string:
///   cyclic(n)         residues 0..n-1
///   dihedral(n)       order 2n; rotations r^k at k, reflections r^k s at n+k
///   symmetric(n)      n <= 5; permutations in lexicographic one-line order
///   klein_four        direct_product(cyclic(2),cyclic(2))
///   direct_product(g1,g2,...)   lexicographic tuples, first factor most significant
/// Throws UnsupportedOrder above limits().max_group_order and ParseError on
/// malformed specs.
FiniteGroup builtin_group(const std::string& spec);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

struct HomomorphismCheck {
  bool ok = true;
  std::optional<Pair> witness;  // f(a b) != f(a) f(b)
};

/// Precondition: f.size() == src.order(), entries < dst.order() (throws
/// DimensionMismatch / InvalidTable otherwise).
HomomorphismCheck is_homomorphism(const MapTable& f, const FiniteGroup& src, const FiniteGroup& dst);

enum class AutSearch { Backtrack, BruteForce };

/// All endomorphisms G -> G in lexicographic table order, by generator-image
/// backtracking with order-profile pruning. Throws BoundExceeded above
/// limits().automorphism_bound.
std::vector<MapTable> endomorphisms(const FiniteGroup& g);

/// All automorphisms in lexicographic table order. BruteForce walks all n!
/// bijections and is limited to limits().brute_force_oracle_max.
std::vector<MapTable> automorphisms(const FiniteGroup& g, AutSearch mode = AutSearch::Backtrack);

struct InnerAutomorphism {
  Elem t;
  MapTable map;  // a -> t^{-1} a t
};

/// One entry per t (duplicates retained).
std::vector<InnerAutomorphism> inner_automorphisms(const FiniteGroup& g);

std::vector<Elem> center(const FiniteGroup& g);

/// Greedy generating set: smallest element outside the span of the previous
/// ones, skipping the identity.
std::vector<Elem> generating_set(const FiniteGroup& g);

}  // namespace twistpost
