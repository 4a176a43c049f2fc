#pragma once

#include <string>
#include <vector>

#include "twistpost/catalog.hpp"

namespace twistpost {

struct EnumerationTask {
  std::string group = "cyclic(2)";
  bool two_sided = false;
  bool weak = false;  // accept every structure that is at least weak
  std::size_t max_candidates = 100'000'000;  // (L_a, Phi(a)) choices tried
  double time_budget_seconds = 600;
  unsigned parallelism = 1;
};

struct EnumerationResult {
  std::vector<CatalogEntry> entries;          // one per isomorphism class, by canonical form
  std::vector<TwistedPostGroup> structures;   // canonical representatives, same order
  std::size_t labeled_count = 0;              // solutions before deduplication
  std::size_t nodes = 0;
  bool truncated = false;                     // a bound was hit; results are partial
};

/// Backtracking over (L_a, Phi(a)) per element, L_a from Aut(G) (End(G) when
/// weak). Each new pair (x, y) forces L_{x o y} = L_x L_y and
/// Phi(x o y) = x o Phi(y), which either assigns x o y or prunes.
/// Throws UnsupportedOrder above limits().enumeration_order. Hitting a
/// bound sets `truncated` rather than throwing.
EnumerationResult enumerate_tpg(const EnumerationTask& task);

}  // namespace twistpost
