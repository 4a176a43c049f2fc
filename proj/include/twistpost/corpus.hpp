#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistpost/tpg.hpp"

namespace twistpost {

/// tri[a][b] = b, Phi = id; with two_sided also tri_right[a][b] = a.
TwistedPostGroup trivial_post_group(const FiniteGroup& g, bool two_sided = true);

/// Klein four group, element (x,y) at index 2x+y, trivial action and
/// Phi(x,y) = (x,0).
TwistedPostGroup klein_projection();

/// Z2 with trivial action and Phi(a) = a+1, so a o b = a+b+1.
TwistedPostGroup z2_shifted();

/// Z4 with a|>b = b+2ab, a<|b = a+2ab, Phi = id (two-sided).
TwistedPostGroup z4_brace();

/// Z3 as a field: a|>b = a<|b = ab, Phi = 0 (two-sided weak).
TwistedPostGroup z3_field();

/// Klein four group with a|>b = s^x(b) for a = (x,y), s(x,y) = (x,x+y),
/// Phi = id. L_(1,0) is a non-inner automorphism.
TwistedPostGroup klein_cyclic();

struct CorpusEntry {
  std::string name;
  TwistedPostGroup t;
};

/// trivial_z2..trivial_z6, trivial_s3, klein_projection, z2_shifted,
/// z4_brace, z3_field, klein_cyclic.
std::vector<CorpusEntry> builtin_corpus();
std::optional<TwistedPostGroup> corpus_instance(const std::string& name);

}  // namespace twistpost
