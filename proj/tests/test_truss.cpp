#include "doctest.h"
#include "support.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"
#include "twistpost/truss.hpp"

using namespace twistpost;

namespace {

OpTable shifted_circ() {
  return support::table(oracle::make_table(2, [](unsigned a, unsigned b) { return (a + b + 1) % 2; }));
}

// Truss law checked straight from its definition.
bool truss_law(const FiniteGroup& g, const OpTable& circ, const MapTable& phi) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (circ(circ(a, b), c) != circ(a, circ(b, c))) return false;
        if (circ(a, g.op(b, c)) != g.op(g.op(circ(a, b), g.inv(phi[a])), circ(a, c))) return false;
      }
  return true;
}

std::vector<TwistedPostGroup> weak_structures() {
  std::vector<TwistedPostGroup> out;
  for (const char* spec : {"cyclic(2)", "cyclic(3)", "cyclic(4)", "klein_four", "symmetric(3)"}) {
    EnumerationTask task;
    task.group = spec;
    task.weak = true;
    for (auto& t : enumerate_tpg(task).structures) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_SUITE("truss") {
  TEST_CASE("examples") {
    const auto s3 = symmetric_group(3);
    CHECK(verify_truss(s3, s3.mul(), MapTable::identity(6)).ok());
    CHECK(verify_truss(cyclic_group(2), shifted_circ(), MapTable(std::vector<Elem>{1, 0})).ok());
    const auto bad = verify_truss(cyclic_group(2), shifted_circ(), MapTable::identity(2));
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.first_failure()->name == "left_distributive");
    CHECK_FALSE(bad.first_failure()->witness.empty());
    CHECK_THROWS_AS(make_truss(cyclic_group(2), shifted_circ(), MapTable::identity(2)), Error);
  }

  TEST_CASE("cocycle inference") {
    CHECK(infer_cocycle(cyclic_group(2), shifted_circ()) == MapTable(std::vector<Elem>{1, 0}));
    const auto k = tpg_to_truss(klein_projection());
    CHECK(infer_cocycle(k.group, k.circ) == k.phi);
  }

  TEST_CASE("structure to truss") {
    const auto s = tpg_to_truss(trivial_post_group(cyclic_group(3)));
    CHECK(s.circ == s.group.mul());
    const auto k = klein_projection();
    const auto sk = tpg_to_truss(k);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) CHECK(sk.circ(a, b) == k.group().op(k.phi()[a], b));
    const auto f = tpg_to_truss(z3_field());
    CHECK(f.circ == support::table(oracle::make_table(3, [](unsigned a, unsigned b) { return a * b % 3; })));
    CHECK(f.two_sided);
    CHECK(verify_truss(f.group, f.circ, f.phi, true).ok());
  }

  TEST_CASE("truss to structure") {
    const auto z4 = cyclic_group(4);
    const auto t = truss_to_weak_tpg(make_truss(z4, z4.mul(), MapTable::identity(4)));
    CHECK(t.kind() == Kind::LeftTwisted);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) CHECK(t.act(a, b) == b);
    const auto sh = truss_to_weak_tpg(make_truss(cyclic_group(2), shifted_circ(), MapTable(std::vector<Elem>{1, 0})));
    CHECK(sh.kind() == Kind::LeftTwisted);
    CHECK(sh.phi() == MapTable(std::vector<Elem>{1, 0}));
    const auto back = truss_to_weak_tpg(tpg_to_truss(z3_field()));
    CHECK(back.tri() == z3_field().tri());
    CHECK(back.kind() == Kind::LeftWeak);
  }

  TEST_CASE("roundtrips and divisibility across weak structures") {
    std::size_t twisted = 0, weak_only = 0;
    for (const auto& t : weak_structures()) {
      const auto s = tpg_to_truss(t);
      CHECK(truss_law(s.group, s.circ, s.phi));
      CHECK(roundtrip_check(t));
      CHECK(roundtrip_check(s));
      const bool rows_are_permutations = [&] {
        for (Elem a = 0; a < t.order(); ++a) {
          std::set<Elem> row;
          for (Elem b = 0; b < t.order(); ++b) row.insert(s.circ(a, b));
          if (row.size() != t.order()) return false;
        }
        return true;
      }();
      CHECK(is_right_divisible(s).ok == rows_are_permutations);
      CHECK(is_right_divisible(s).ok == t.is_twisted());
      (t.is_twisted() ? twisted : weak_only)++;
    }
    CHECK(twisted > 0);
    CHECK(weak_only > 0);
  }

  TEST_CASE("divisibility witnesses") {
    const auto d = is_right_divisible(tpg_to_truss(z3_field()));
    CHECK_FALSE(d.ok);
    CHECK(d.witness == Elem{0});
    CHECK(is_right_divisible(make_truss(cyclic_group(2), shifted_circ(), MapTable(std::vector<Elem>{1, 0}))).ok);
    CHECK(roundtrip_check(trivial_post_group(cyclic_group(1))));
  }

  TEST_CASE("truss homomorphisms") {
    const auto k = tpg_to_truss(klein_projection());
    const auto id = truss_homomorphism_check(MapTable::identity(4), k, k);
    CHECK(id.ok());
    CHECK(id.phi_compatible);
    const auto swap = truss_homomorphism_check(MapTable(std::vector<Elem>{0, 2, 1, 3}), k, k);
    CHECK_FALSE(swap.ok());
    CHECK_FALSE(swap.phi_compatible);
    CHECK(swap.phi_witness.has_value());
  }
}
