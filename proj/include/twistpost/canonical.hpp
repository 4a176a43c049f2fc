#pragma once

#include <optional>
#include <tuple>

#include "twistpost/tpg.hpp"

namespace twistpost {

/// Tables of a structure after a relabeling of the carrier.
struct CanonicalForm {
  OpTable mul;
  std::optional<OpTable> tri;
  std::optional<OpTable> tri_right;
  MapTable phi;
  MapTable relabeling;  // old index -> new index

  friend bool operator==(const CanonicalForm& l, const CanonicalForm& r) {
    return l.mul == r.mul && l.tri == r.tri && l.tri_right == r.tri_right && l.phi == r.phi;
  }
  friend auto operator<=>(const CanonicalForm& l, const CanonicalForm& r) {
    return std::tie(l.mul, l.tri, l.tri_right, l.phi) <=> std::tie(r.mul, r.tri, r.tri_right, r.phi);
  }
};

/// new[s(a)][s(b)] = s(old[a][b]) for every table, new_phi[s(a)] = s(phi[a]).
/// s must be a permutation.
CanonicalForm relabel(const FiniteGroup& g, const std::optional<OpTable>& tri, const std::optional<OpTable>& tri_right,
                      const MapTable& phi, const MapTable& s);

/// Lexicographically least relabeled (mul, tri, tri_right, phi). Up to
/// limits().canonical_exhaustive_max the minimum runs over all n!
/// relabelings (first minimizing mul, then the rest over the minimizers);
/// above it only over Aut(G) with mul held fixed.
CanonicalForm canonical_form(const TwistedPostGroup& t);

}  // namespace twistpost
