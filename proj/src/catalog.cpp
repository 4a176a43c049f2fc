#include "twistpost/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return fmt::format("{:016x}", h);
}

namespace {

Json form_tables(const CanonicalForm& f) {
  Json j{{"mul", to_json(f.mul)}};
  if (f.tri) j["tri"] = to_json(*f.tri);
  if (f.tri_right) j["tri_right"] = to_json(*f.tri_right);
  j["phi"] = to_json(f.phi);
  return j;
}

std::string verdict_digest(const TwistedPostGroup& t) {
  std::string s = to_string(t.kind());
  auto add = [&s](const SideReport& r) {
    for (const auto& c : r.axioms.checks) s += fmt::format(";{}={}", c.name, c.ok);
  };
  if (t.has_left()) add(classify(t.group(), t.tri(), t.phi()));
  if (t.has_right()) add(classify_right(t.group(), t.tri_right(), t.phi()));
  return fnv1a_hex(s);
}

}  // namespace

CatalogEntry make_entry(const TwistedPostGroup& t, std::string provenance) {
  CatalogEntry e;
  e.form = canonical_form(t);
  e.id = fnv1a_hex(form_tables(e.form).dump());
  e.kind = t.kind();
  e.order = t.order();
  e.provenance = std::move(provenance);
  e.digest = verdict_digest(t);
  return e;
}

TwistedPostGroup entry_structure(const CatalogEntry& e) {
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorCode::VerificationMismatch, fmt::format("entry {}: {}", e.id, why));
  };
  std::optional<TwistedPostGroup> t;
  try {
    t = TwistedPostGroup::from_tables(make_group(e.form.mul), e.form.tri, e.form.tri_right, e.form.phi);
  } catch (const Error& err) {
    throw mismatch(err.what());
  }
  if (t->kind() != e.kind)
    throw mismatch(fmt::format("recorded as {}, verifies as {}", to_string(e.kind), to_string(t->kind())));
  const std::string id = fnv1a_hex(form_tables(e.form).dump());
  if (id != e.id) throw mismatch(fmt::format("tables hash to {}", id));
  return std::move(*t);
}

Json to_json(const CatalogEntry& e) {
  Json j{{"id", e.id}, {"kind", to_string(e.kind)}, {"order", e.order}};
  j.update(form_tables(e.form));
  j["provenance"] = e.provenance;
  j["digest"] = e.digest;
  return j;
}

CatalogEntry entry_from_json(const Json& j) {
  try {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    const auto kind = kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::ParseError, "unknown kind " + j.at("kind").dump());
    e.kind = *kind;
    e.order = j.at("order").get<std::size_t>();
    e.form.mul = table_from_json(j.at("mul"), e.order, "mul");
    if (j.contains("tri")) e.form.tri = table_from_json(j.at("tri"), e.order, "tri");
    if (j.contains("tri_right")) e.form.tri_right = table_from_json(j.at("tri_right"), e.order, "tri_right");
    e.form.phi = map_from_json(j.at("phi"), e.order, "phi");
    e.form.relabeling = MapTable::identity(e.order);
    e.provenance = j.value("provenance", std::string());
    e.digest = j.value("digest", std::string());
    return e;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

std::size_t catalog_store(const std::string& path, const std::vector<CatalogEntry>& entries) {
  std::set<std::string> present;
  if (std::filesystem::exists(path))
    for (const auto& e : catalog_load(path)) present.insert(e.id);
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  std::size_t written = 0;
  for (const auto& e : entries) {
    if (!present.insert(e.id).second) continue;
    out << to_json(e).dump() << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
  return written;
}

std::vector<CatalogEntry> catalog_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::vector<CatalogEntry> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CatalogEntry e;
    try {
      e = entry_from_json(parse_json(line));
    } catch (const Error& err) {
      throw Error(err.code(), fmt::format("{}:{}: {}", path, lineno, err.what()));
    }
    entry_structure(e);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace twistpost
