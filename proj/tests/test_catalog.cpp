#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "doctest.h"
#include "support.hpp"
#include "twistpost/canonical.hpp"
#include "twistpost/catalog.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"

using namespace twistpost;
namespace fs = std::filesystem;

namespace {

// Rebuilds t on a carrier relabeled by s, independently of the library's
// relabel.
TwistedPostGroup permuted(const TwistedPostGroup& t, const oracle::Map& s) {
  const auto mul = oracle::relabel(support::rows(t.group().mul()), s);
  std::optional<OpTable> tri, tr;
  if (t.has_left()) tri = support::table(oracle::relabel(support::rows(t.tri()), s));
  if (t.has_right()) tr = support::table(oracle::relabel(support::rows(t.tri_right()), s));
  return TwistedPostGroup::from_tables(make_group(support::table(mul)), tri, tr,
                                       support::map(oracle::relabel(support::values(t.phi()), s)));
}

std::vector<TwistedPostGroup> samples() {
  std::vector<TwistedPostGroup> out;
  for (auto& e : builtin_corpus()) out.push_back(std::move(e.t));
  for (const char* spec : {"cyclic(4)", "symmetric(3)"}) {
    EnumerationTask task;
    task.group = spec;
    task.weak = true;
    for (auto& t : enumerate_tpg(task).structures) out.push_back(std::move(t));
  }
  return out;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& tag)
      : path(fs::temp_directory_path() / ("twistpost_test_" + tag + "_" + std::to_string(::getpid()) + ".ndjson")) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    for (const auto& t : samples()) {
      const auto base = canonical_form(t);
      const auto js = to_json(base.mul).dump() + to_json(base.phi).dump();
      for (int k = 0; k < 5; ++k) {
        oracle::Map s(t.order());
        for (unsigned i = 0; i < s.size(); ++i) s[i] = i;
        std::shuffle(s.begin(), s.end(), rng);
        const auto p = permuted(t, s);
        CHECK(p.kind() == t.kind());
        const auto f = canonical_form(p);
        CHECK(f == base);
        CHECK(to_json(f.mul).dump() + to_json(f.phi).dump() == js);
        CHECK(make_entry(p, "x").id == make_entry(t, "y").id);
      }
    }
  }

  TEST_CASE("canonical form is a relabeling of the input") {
    for (const auto& t : samples()) {
      const auto f = canonical_form(t);
      CHECK(f.relabeling.is_bijective());
      CHECK(relabel(t.group(), t.has_left() ? std::optional(t.tri()) : std::nullopt,
                    t.has_right() ? std::optional(t.tri_right()) : std::nullopt, t.phi(), f.relabeling) == f);
    }
  }

  TEST_CASE("distinct classes get distinct ids") {
    EnumerationTask task;
    task.group = "klein_four";
    const auto r = enumerate_tpg(task);
    std::set<std::string> ids;
    for (const auto& e : r.entries) ids.insert(e.id);
    CHECK(ids.size() == r.entries.size());
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
  }

  TEST_CASE("store and load") {
    TempFile f("roundtrip");
    std::vector<CatalogEntry> entries;
    for (const auto& t : samples()) entries.push_back(make_entry(t, "test"));
    const auto written = catalog_store(f.path.string(), entries);
    std::set<std::string> ids;
    for (const auto& e : entries) ids.insert(e.id);
    CHECK(written == ids.size());
    CHECK(catalog_store(f.path.string(), entries) == 0);
    const auto loaded = catalog_load(f.path.string());
    REQUIRE(loaded.size() == ids.size());
    for (const auto& e : loaded) {
      CHECK(ids.count(e.id) == 1);
      CHECK(entry_structure(e).kind() == e.kind);
    }
  }

  TEST_CASE("a corrupted entry is named") {
    TempFile f("corrupt");
    const auto e = make_entry(klein_projection(), "test");
    auto j = to_json(e);
    j["phi"][1] = 3;
    {
      std::ofstream os(f.path);
      os << to_json(make_entry(z4_brace(), "test")).dump() << '\n' << j.dump() << '\n';
    }
    try {
      catalog_load(f.path.string());
      FAIL("corrupted catalog loaded");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::VerificationMismatch);
      CHECK(std::string(err.what()).find(e.id) != std::string::npos);
    }
  }

  TEST_CASE("empty, missing and malformed files") {
    TempFile f("empty");
    { std::ofstream os(f.path); }
    CHECK(catalog_load(f.path.string()).empty());
    try {
      catalog_load((f.path.string() + ".missing"));
      FAIL("missing file loaded");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::IoError);
    }
    {
      std::ofstream os(f.path);
      os << to_json(make_entry(z4_brace(), "test")).dump() << "\n{not json\n";
    }
    try {
      catalog_load(f.path.string());
      FAIL("malformed catalog loaded");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::ParseError);
      CHECK(std::string(err.what()).find(f.path.string() + ":2:") != std::string::npos);
    }
  }
}
