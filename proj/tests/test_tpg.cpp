#include <random>

#include "doctest.h"
#include "support.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"
#include "twistpost/tpg.hpp"

using namespace twistpost;

namespace {

OpTable trivial_tri(std::size_t n) {
  return support::table(oracle::make_table(n, [](unsigned, unsigned b) { return b; }));
}

// Local identity and dagger computed by scanning for the solution of
// L_a(x) = y rather than inverting L_a.
std::optional<Elem> solve(const TwistedPostGroup& t, Elem a, Elem y) {
  for (Elem x = 0; x < t.order(); ++x)
    if (t.act(a, x) == y) return x;
  return std::nullopt;
}

std::vector<TwistedPostGroup> enumerated_twisted(std::size_t max_order) {
  std::vector<TwistedPostGroup> out;
  for (const char* spec : {"cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "klein_four", "cyclic(5)", "cyclic(6)",
                           "symmetric(3)"}) {
    if (builtin_group(spec).order() > max_order) continue;
    EnumerationTask task;
    task.group = spec;
    for (auto& t : enumerate_tpg(task).structures) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_SUITE("tpg") {
  TEST_CASE("classification of the basic examples") {
    const auto z2 = cyclic_group(2);
    CHECK(TwistedPostGroup::left(z2, trivial_tri(2), MapTable::identity(2)).kind() == Kind::LeftTwisted);

    const auto z3 = cyclic_group(3);
    const auto field = support::table(oracle::make_table(3, [](unsigned a, unsigned b) { return a * b % 3; }));
    const auto s = classify(z3, field, MapTable(3, 0));
    CHECK(s.weak());
    CHECK_FALSE(s.twisted());
    CHECK(s.axioms.checks[1].witness == std::vector<Elem>{0});
    const auto r = classify_right(z3, field, MapTable(3, 0));
    CHECK(r.weak());
    CHECK_FALSE(r.twisted());

    CHECK(klein_projection().kind() == Kind::LeftTwisted);
    CHECK(z4_brace().kind() == Kind::TwoSidedTwisted);
    CHECK(z3_field().kind() == Kind::TwoSidedWeak);
    CHECK(trivial_post_group(symmetric_group(3)).kind() == Kind::TwoSidedTwisted);
  }

  TEST_CASE("right z4 example") {
    const auto tr = support::table(oracle::make_table(4, [](unsigned a, unsigned b) { return (a + 2 * a * b) % 4; }));
    CHECK(classify_right(cyclic_group(4), tr, MapTable::identity(4)).twisted());
    CHECK(classify_right(cyclic_group(2), support::table(oracle::make_table(2, [](unsigned a, unsigned) { return a; })),
                         MapTable::identity(2))
              .twisted());
  }

  TEST_CASE("klein right map is not an endomorphism") {
    const auto t = klein_projection();
    const auto& g = t.group();
    OpTable tr(4);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) tr.at(a, b) = g.op(g.op(t.phi()[a], b), g.inv(t.phi()[b]));
    const auto rep = classify_two_sided(g, t.tri(), tr, t.phi());
    CHECK_FALSE(rep.kind.has_value());
    const Check& r1 = rep.right.axioms.checks[0];
    REQUIRE_FALSE(r1.ok);
    // witness (b, a, c): a |-> a<|b is not multiplicative at (a, c)
    REQUIRE(r1.witness.size() == 3);
    const Elem b = r1.witness[0], a = r1.witness[1], c = r1.witness[2];
    CHECK(tr(g.op(a, c), b) != g.op(tr(a, b), tr(c, b)));
  }

  TEST_CASE("constructors reject non-structures") {
    const auto g = cyclic_group(3);
    OpTable bad(3, 0);
    bad.at(1, 1) = 2;
    try {
      TwistedPostGroup::left(g, bad, MapTable::identity(3));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotATwistedPostGroup);
    }
    CHECK_THROWS_AS(classify(g, OpTable(2, 0), MapTable::identity(3)), Error);
  }

  TEST_CASE("classify agrees with the direct axiom evaluation on random tables") {
    std::mt19937_64 rng(7);
    for (const char* spec : {"cyclic(3)", "klein_four", "symmetric(3)"}) {
      const auto g = builtin_group(spec);
      const auto og = support::group(g);
      const auto auts = automorphisms(g);
      std::uniform_int_distribution<std::size_t> pick_aut(0, auts.size() - 1);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
      for (int trial = 0; trial < 300; ++trial) {
        OpTable tri(g.order());
        MapTable phi(g.order());
        for (Elem a = 0; a < g.order(); ++a) {
          const auto& L = auts[pick_aut(rng)];
          for (Elem b = 0; b < g.order(); ++b) tri.at(a, b) = L[b];
          phi[a] = pick(rng);
        }
        if (trial % 3 == 0) tri.at(pick(rng), pick(rng)) = pick(rng);
        const auto expect = oracle::left_axioms(og, support::rows(tri), support::values(phi));
        const auto got = classify(g, tri, phi);
        for (int i = 0; i < 4; ++i) CHECK(got.axioms.checks[i].ok == expect[i]);
        // every rejection carries a witness
        for (const auto& c : got.axioms.checks)
          if (!c.ok) CHECK_FALSE(c.witness.empty());
      }
    }
  }

  TEST_CASE("sub-adjacent data of the examples") {
    const auto post = trivial_post_group(symmetric_group(3));
    const auto sp = sub_adjacent(post);
    for (Elem a = 0; a < 6; ++a) CHECK(sp.e_at(a) == post.group().identity());

    const auto z3 = sub_adjacent(trivial_post_group(cyclic_group(3)));
    CHECK(z3.dagger_at(1) == 2);
    CHECK(z3.dagger_at(2) == 1);

    const auto k = klein_projection();
    const auto sk = sub_adjacent(k);
    for (Elem a = 0; a < 4; ++a) {
      CHECK(sk.e_at(a) == (a & 1u));
      CHECK(sk.dagger_at(a) == a);
    }

    const auto weak = sub_adjacent(z3_field());
    CHECK(weak.undefined == std::vector<Elem>{0});
  }

  TEST_CASE("local identities match a direct solve") {
    for (const auto& t : enumerated_twisted(6)) {
      const auto& g = t.group();
      const auto sa = sub_adjacent(t);
      for (Elem a = 0; a < t.order(); ++a) {
        const auto e = solve(t, a, g.op(g.inv(t.phi()[a]), a));
        REQUIRE(e.has_value());
        CHECK(sa.e_at(a) == *e);
        CHECK(sa.dagger_at(a) == *solve(t, a, g.op(g.inv(t.phi()[a]), *e)));
      }
    }
  }

  TEST_CASE("law suite holds on the corpus and enumerated structures") {
    std::size_t count = 0;
    for (const auto& e : builtin_corpus())
      if (e.t.is_twisted() && e.t.is_left_kind()) {
        CAPTURE(e.name);
        CHECK(check_subadjacent_laws(e.t).ok());
        ++count;
      }
    for (const auto& t : enumerated_twisted(6)) {
      const Report r = check_subadjacent_laws(t);
      CHECK_MESSAGE(r.ok(), r.failure_message());
      ++count;
    }
    CHECK(count > 100);
  }

  TEST_CASE("law suite catches a corrupted table") {
    const auto t = klein_projection();
    OpTable tri = t.tri();
    tri.at(1, 2) = 3;
    const auto r = subadjacent_laws(t.group(), tri, t.phi());
    REQUIRE_FALSE(r.ok());
    CHECK_FALSE(r.first_failure()->witness.empty());
    CHECK_THROWS_AS(check_subadjacent_laws(z3_field()), Error);
  }

  TEST_CASE("components") {
    const auto k = klein_projection();
    const auto c0 = component(k, 0);
    CHECK(c0.members == std::vector<Elem>{0, 2});
    CHECK(c0.checks.ok());
    const auto c1 = component(k, 1);
    CHECK(c1.members == std::vector<Elem>{1, 3});
    CHECK(c1.idempotent == 1);
    for (Elem a = 0; a < 3; ++a)
      CHECK(component(trivial_post_group(cyclic_group(3)), a).members == std::vector<Elem>{0, 1, 2});
  }

  TEST_CASE("decomposition") {
    const auto d = decompose(klein_projection());
    CHECK(d.checks.ok());
    CHECK(d.components.size() == 2);
    CHECK(d.idempotents == std::vector<Elem>{0, 1});
    CHECK(d.sub_adjacent_group == std::vector<Elem>{0, 2});
    for (const auto& t : enumerated_twisted(6)) {
      const auto dt = decompose(t);
      CHECK_MESSAGE(dt.checks.ok(), dt.checks.failure_message());
      CHECK(dt.sub_adjacent_group.size() * dt.idempotents.size() == t.order());
      // components partition G
      std::vector<int> seen(t.order(), 0);
      for (const auto& c : dt.components)
        for (Elem x : c) ++seen[x];
      for (int s : seen) CHECK(s == 1);
    }
    const auto z4 = decompose(z4_brace());
    CHECK(z4.components.size() == 1);
  }

  TEST_CASE("cocycle lemmas") {
    CHECK(cocycle_lemmas(klein_projection()).ok());
    const auto s = z2_shifted();
    CHECK(cocycle_lemmas(s).ok());
    CHECK(s.phi().after(s.phi()) != s.phi());
    for (const auto& t : enumerated_twisted(5)) CHECK(cocycle_lemmas(t).ok());
  }

  TEST_CASE("homomorphisms of structures") {
    const auto k = klein_projection();
    CHECK(tpg_homomorphism_check(MapTable::identity(4), k, k).ok());
    const auto swap = tpg_homomorphism_check(MapTable(std::vector<Elem>{0, 2, 1, 3}), k, k);
    CHECK(swap.passed("group_homomorphism"));
    CHECK(swap.passed("action_compatible"));
    CHECK_FALSE(swap.passed("phi_compatible"));
    CHECK_FALSE(swap.find("phi_compatible")->witness.empty());
    CHECK(tpg_homomorphism_check(k.phi(), k, k).ok());
  }

  TEST_CASE("kind names roundtrip") {
    for (Kind k : {Kind::LeftTwisted, Kind::LeftWeak, Kind::RightTwisted, Kind::RightWeak, Kind::TwoSidedTwisted,
                   Kind::TwoSidedWeak})
      CHECK(kind_from_string(to_string(k)) == k);
    CHECK_FALSE(kind_from_string("nonsense").has_value());
  }
}
