#pragma once

#include <cstddef>
#include <cstdint>

namespace twistpost {

/// Every size and search bound in one place.
struct Limits {
  std::size_t max_group_order = 720;       // builtin_group
  std::size_t automorphism_bound = 24;     // automorphisms / endomorphisms
  std::size_t brute_force_oracle_max = 8;  // n! oracle mode for automorphisms
  std::size_t enumeration_order = 8;       // enumerate_tpg, TWISTPOST_MAX_ORDER
  std::size_t canonical_exhaustive_max = 8;
  std::size_t reconstruct_cap = 16;
  std::uint64_t reconstruct_space_cap = 1'000'000;
};

/// Process-wide limits; TWISTPOST_MAX_ORDER overrides enumeration_order on
/// first access.
const Limits& limits();
void set_limits(const Limits& l);

}  // namespace twistpost
