#pragma once

#include <string>
#include <vector>

#include "twistpost/canonical.hpp"
#include "twistpost/json_io.hpp"

namespace twistpost {

struct CatalogEntry {
  std::string id;  // FNV-1a 64 of the canonical tables, hex
  Kind kind = Kind::LeftTwisted;
  std::size_t order = 0;
  CanonicalForm form;
  std::string provenance;  // builtin:<name> | imported:<path> | enumerated:<params>
  std::string digest;      // hash of the verification verdicts; advisory only
};

std::string fnv1a_hex(const std::string& bytes);

/// Canonicalizes and hashes. The structure's kind is recorded as verified.
CatalogEntry make_entry(const TwistedPostGroup& t, std::string provenance);

/// Rebuilds the structure from the entry's tables, re-running every check.
/// Throws VerificationMismatch if the tables no longer verify, if the kind
/// differs from the recorded one, or if the id does not match the tables.
TwistedPostGroup entry_structure(const CatalogEntry& e);

Json to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j);

/// Appends entries whose id is not yet in the file (created if missing).
/// Returns the number written.
std::size_t catalog_store(const std::string& path, const std::vector<CatalogEntry>& entries);

/// Loads and re-verifies every line; empty file gives an empty catalog.
/// Throws IoError, ParseError (with line number) or VerificationMismatch.
std::vector<CatalogEntry> catalog_load(const std::string& path);

}  // namespace twistpost
