#include <set>

#include "doctest.h"
#include "support.hpp"
#include "twistpost/canonical.hpp"
#include "twistpost/config.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"

using namespace twistpost;

namespace {

EnumerationResult run(const std::string& group, bool two_sided, bool weak, std::size_t jobs = 1) {
  EnumerationTask task;
  task.group = group;
  task.two_sided = two_sided;
  task.weak = weak;
  task.parallelism = jobs;
  return enumerate_tpg(task);
}

void compare(const EnumerationResult& r, const oracle::Counts& c) {
  CHECK_FALSE(r.truncated);
  CHECK(r.labeled_count == c.labeled);
  CHECK(r.entries.size() == c.classes);
  CHECK(r.structures.size() == r.entries.size());
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("counts agree with brute force on cyclic groups") {
    for (std::size_t n : {2u, 3u}) {
      CAPTURE(n);
      const auto spec = "cyclic(" + std::to_string(n) + ")";
      const auto bf = oracle::brute_force(oracle::cyclic(n));
      compare(run(spec, false, false), bf.left_twisted);
      compare(run(spec, false, true), bf.left_weak);
      compare(run(spec, true, false), bf.two_sided_twisted);
      compare(run(spec, true, true), bf.two_sided_weak);
    }
  }

  TEST_CASE("every representative passes the independent axioms") {
    for (const char* spec : {"cyclic(4)", "klein_four", "symmetric(3)", "cyclic(5)"}) {
      CAPTURE(spec);
      for (bool weak : {false, true}) {
        const auto r = run(spec, false, weak);
        std::set<std::string> ids;
        for (std::size_t i = 0; i < r.structures.size(); ++i) {
          const auto& t = r.structures[i];
          const auto g = support::group(t.group());
          const auto ax = oracle::left_axioms(g, support::rows(t.tri()), support::values(t.phi()));
          CHECK(oracle::weak(ax));
          if (!weak) CHECK(oracle::twisted(ax));
          CHECK(r.entries[i].kind == t.kind());
          CHECK(ids.insert(r.entries[i].id).second);
          CHECK(r.entries[i].provenance.rfind("enumerated:", 0) == 0);
        }
      }
    }
  }

  TEST_CASE("the klein projection is found") {
    const auto r = run("klein_four", false, false);
    const auto target = canonical_form(klein_projection());
    bool found = false;
    for (const auto& e : r.entries) found = found || e.form == target;
    CHECK(found);
  }

  TEST_CASE("output does not depend on parallelism") {
    for (const char* spec : {"cyclic(4)", "symmetric(3)"}) {
      for (bool two_sided : {false, true}) {
        const auto a = run(spec, two_sided, true, 1);
        const auto b = run(spec, two_sided, true, 3);
        REQUIRE(a.entries.size() == b.entries.size());
        CHECK(a.labeled_count == b.labeled_count);
        for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].id == b.entries[i].id);
      }
    }
  }

  TEST_CASE("truncation") {
    EnumerationTask task;
    task.group = "symmetric(3)";
    task.weak = true;
    task.max_candidates = 10;
    const auto r = enumerate_tpg(task);
    CHECK(r.truncated);
    CHECK(r.labeled_count <= run("symmetric(3)", false, true).labeled_count);
  }

  TEST_CASE("bad tasks") {
    EnumerationTask task;
    task.max_candidates = 0;
    CHECK_THROWS_AS(enumerate_tpg(task), Error);
    task = {};
    task.time_budget_seconds = 0;
    CHECK_THROWS_AS(enumerate_tpg(task), Error);
    task = {};
    task.group = "cyclic(9)";
    try {
      enumerate_tpg(task);
      FAIL("order 9 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedOrder);
    }
    const Limits saved = limits();
    Limits l = saved;
    l.enumeration_order = 2;
    set_limits(l);
    task.group = "cyclic(3)";
    CHECK_THROWS_AS(enumerate_tpg(task), Error);
    task.group = "cyclic(2)";
    CHECK(enumerate_tpg(task).labeled_count > 0);
    set_limits(saved);
  }
}
