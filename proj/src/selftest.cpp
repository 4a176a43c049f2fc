#include "twistpost/selftest.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>

#include <unistd.h>

#include <fmt/format.h>

#include "twistpost/brace.hpp"
#include "twistpost/canonical.hpp"
#include "twistpost/catalog.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"
#include "twistpost/hopf.hpp"
#include "twistpost/lie.hpp"
#include "twistpost/rota_baxter.hpp"
#include "twistpost/truss.hpp"

namespace twistpost {

namespace {

struct Outcome {
  bool ok;
  std::string detail;
  Outcome(bool v, std::string d = {}) : ok(v), detail(std::move(d)) {}
};

class Runner {
 public:
  void run(const std::string& name, const std::function<Outcome()>& fn) {
    try {
      Outcome o = fn();
      report.add(name, o.ok, {}, std::move(o.detail));
    } catch (const std::exception& e) {
      report.add(name, false, {}, fmt::format("threw {}", e.what()));
    }
  }
  Report report;
};

template <class F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

OpTable table_of(std::size_t n, const std::function<Elem(Elem, Elem)>& f) {
  OpTable t(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.at(a, b) = f(a, b);
  return t;
}

OpTable trivial_tri(std::size_t n) {
  return table_of(n, [](Elem, Elem b) { return b; });
}

bool witness_is(const Check* c, std::vector<Elem> w) { return c && !c->ok && c->witness == w; }

// Naive count of left structures on g: every |>-table from End-rows and
// every Phi, filtered by classify. Only used at order 2 here.
std::pair<std::size_t, std::size_t> naive_left_counts(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t twisted = 0, weak = 0;
  std::size_t tables = 1, maps = 1;
  for (std::size_t i = 0; i < n * n; ++i) tables *= n;
  for (std::size_t i = 0; i < n; ++i) maps *= n;
  for (std::size_t ti = 0; ti < tables; ++ti) {
    OpTable tri(n);
    std::size_t x = ti;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b, x /= n) tri.at(a, b) = static_cast<Elem>(x % n);
    for (std::size_t pi = 0; pi < maps; ++pi) {
      MapTable phi(n);
      std::size_t y = pi;
      for (Elem a = 0; a < n; ++a, y /= n) phi[a] = static_cast<Elem>(y % n);
      const SideReport s = classify(g, tri, phi);
      twisted += s.twisted();
      weak += s.weak();
    }
  }
  return {twisted, weak};
}

void groups(Runner& r) {
  r.run("group.order_one", [] {
    const auto g = make_group(OpTable::from_rows({{0}}));
    return Outcome(g.order() == 1 && g.identity() == 0);
  });
  r.run("group.z2_table", [] {
    const auto g = make_group(OpTable::from_rows({{0, 1}, {1, 0}}));
    return Outcome(g.identity() == 0 && g.inverses() == MapTable(std::vector<Elem>{0, 1}));
  });
  r.run("group.non_associative_latin_square", [] {
    // Latin square with identity 0 but (1*1)*2 != 1*(1*2).
    const auto t = OpTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
    try {
      make_group(t);
    } catch (const Error& e) {
      return Outcome(e.code() == ErrorCode::NotAssociative, e.what());
    }
    return Outcome(false, "accepted");
  });
  r.run("group.cyclic4", [] {
    const auto g = builtin_group("cyclic(4)");
    return Outcome(g.mul() == table_of(4, [](Elem a, Elem b) { return (a + b) % 4; }));
  });
  r.run("group.klein_four", [] {
    const auto g = builtin_group("klein_four");
    bool ok = g.order() == 4;
    for (Elem a = 0; a < 4; ++a) ok = ok && g.element_order(a) == (a == g.identity() ? 1u : 2u);
    return Outcome(ok);
  });
  r.run("group.symmetric3", [] {
    const auto g = builtin_group("symmetric(3)");
    const auto inner = inner_automorphisms(g);
    std::set<MapTable> distinct;
    for (const auto& i : inner) distinct.insert(i.map);
    return Outcome(g.order() == 6 && !g.is_abelian() && distinct.size() == 6 &&
                   automorphisms(g, AutSearch::BruteForce).size() == 6);
  });
  r.run("hom.identity_z4", [] {
    const auto g = cyclic_group(4);
    return Outcome(is_homomorphism(MapTable::identity(4), g, g).ok);
  });
  r.run("hom.doubling_z4", [] {
    const auto g = cyclic_group(4);
    return Outcome(is_homomorphism(MapTable(std::vector<Elem>{0, 2, 0, 2}), g, g).ok);
  });
  r.run("hom.swap_z4_witness", [] {
    const auto g = cyclic_group(4);
    const auto h = is_homomorphism(MapTable(std::vector<Elem>{0, 2, 1, 3}), g, g);
    return Outcome(!h.ok && h.witness && h.witness->a == 1 && h.witness->b == 1);
  });
  r.run("aut.trivial_group", [] {
    const auto a = automorphisms(cyclic_group(1));
    return Outcome(a.size() == 1 && a[0] == MapTable::identity(1));
  });
  r.run("aut.z4", [] {
    const auto g = cyclic_group(4);
    const auto a = automorphisms(g);
    return Outcome(a.size() == 2 && a == automorphisms(g, AutSearch::BruteForce) &&
                   a[1] == MapTable(std::vector<Elem>{0, 3, 2, 1}));
  });
  r.run("aut.klein_four", [] {
    const auto g = builtin_group("klein_four");
    return Outcome(automorphisms(g).size() == 6 && automorphisms(g, AutSearch::BruteForce).size() == 6);
  });
  r.run("inner.abelian_is_identity", [] {
    bool ok = true;
    for (const auto& i : inner_automorphisms(cyclic_group(5))) ok = ok && i.map == MapTable::identity(5);
    return Outcome(ok);
  });
  r.run("inner.z2", [] {
    const auto i = inner_automorphisms(cyclic_group(2));
    return Outcome(i.size() == 2 && i[0].t == 0 && i[1].t == 1 && i[0].map == MapTable::identity(2) &&
                   i[1].map == MapTable::identity(2));
  });
}

void tpg(Runner& r) {
  r.run("classify.trivial_z2", [] {
    return Outcome(TwistedPostGroup::left(cyclic_group(2), trivial_tri(2), MapTable::identity(2)).kind() ==
                   Kind::LeftTwisted);
  });
  r.run("classify.z3_field_weak", [] {
    const auto g = cyclic_group(3);
    const auto s = classify(g, table_of(3, [](Elem a, Elem b) { return a * b % 3; }), MapTable(3, 0));
    return Outcome(s.weak() && !s.twisted() && witness_is(&s.axioms.checks[1], {0}));
  });
  r.run("classify.klein_projection", [] {
    const auto t = klein_projection();
    return Outcome(t.kind() == Kind::LeftTwisted && t.phi() != MapTable::identity(4));
  });
  r.run("classify_right.trivial_z2", [] {
    const auto s = classify_right(cyclic_group(2), table_of(2, [](Elem a, Elem) { return a; }), MapTable::identity(2));
    return Outcome(s.twisted());
  });
  r.run("classify_right.z4", [] {
    const auto s = classify_right(cyclic_group(4), table_of(4, [](Elem a, Elem b) { return (a + 2 * a * b) % 4; }),
                                  MapTable::identity(4));
    return Outcome(s.twisted());
  });
  r.run("classify_right.z3_field_weak", [] {
    const auto s = classify_right(cyclic_group(3), table_of(3, [](Elem a, Elem b) { return a * b % 3; }), MapTable(3, 0));
    return Outcome(s.weak() && !s.twisted());
  });
  r.run("classify_two_sided.z4", [] {
    const auto t = z4_brace();
    const auto circ = left_circ(t.group(), t.tri(), t.phi());
    return Outcome(t.kind() == Kind::TwoSidedTwisted && t.group().is_abelian() &&
                   circ == table_of(4, [](Elem a, Elem b) { return (a + b + 2 * a * b) % 4; }));
  });
  r.run("classify_two_sided.trivial_s3", [] {
    return Outcome(trivial_post_group(symmetric_group(3)).kind() == Kind::TwoSidedTwisted);
  });
  r.run("classify_two_sided.klein_right_map", [] {
    const auto t = klein_projection();
    const auto& g = t.group();
    const auto right = table_of(4, [&](Elem a, Elem b) { return g.op(g.op(t.phi()[a], b), g.inv(t.phi()[b])); });
    const auto rep = classify_two_sided(g, t.tri(), right, t.phi());
    const Check& r1 = rep.right.axioms.checks[0];
    return Outcome(!rep.kind && !r1.ok && !r1.witness.empty(), r1.name);
  });
  r.run("subadjacent.post_group_e_is_one", [] {
    const auto sa = sub_adjacent(trivial_post_group(symmetric_group(3)));
    bool ok = true;
    for (Elem a = 0; a < 6; ++a) ok = ok && sa.e_at(a) == 0;
    return Outcome(ok);
  });
  r.run("subadjacent.z3_dagger_is_inverse", [] {
    const auto sa = sub_adjacent(trivial_post_group(cyclic_group(3)));
    return Outcome(sa.dagger_at(0) == 0 && sa.dagger_at(1) == 2 && sa.dagger_at(2) == 1);
  });
  r.run("subadjacent.klein_projection", [] {
    const auto t = klein_projection();
    const auto sa = sub_adjacent(t);
    bool ok = true;
    for (Elem a = 0; a < 4; ++a)
      ok = ok && sa.e_at(a) == (a & 1u) && sa.dagger_at(a) == a && sa.circ(a, sa.dagger_at(a)) == sa.e_at(a);
    return Outcome(ok);
  });
  r.run("laws.klein_projection", [] { return Outcome(check_subadjacent_laws(klein_projection()).ok()); });
  r.run("laws.post_groups", [] {
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n) ok = ok && check_subadjacent_laws(trivial_post_group(cyclic_group(n))).ok();
    return Outcome(ok && check_subadjacent_laws(trivial_post_group(symmetric_group(3))).ok());
  });
  r.run("laws.corrupted_entry", [] {
    const auto t = klein_projection();
    OpTable tri = t.tri();
    tri.at(1, 2) = 3;
    const Report rep = subadjacent_laws(t.group(), tri, t.phi());
    const Check* f = rep.first_failure();
    return Outcome(f && !f->witness.empty(), f ? f->name : "");
  });
  r.run("component.post_group_z3", [] {
    const auto t = trivial_post_group(cyclic_group(3));
    bool ok = true;
    for (Elem a = 0; a < 3; ++a) ok = ok && component(t, a).members == std::vector<Elem>{0, 1, 2};
    return Outcome(ok);
  });
  r.run("component.klein_g00", [] {
    const auto c = component(klein_projection(), 0);
    return Outcome(c.members == std::vector<Elem>{0, 2} && c.idempotent == 0 && c.checks.ok());
  });
  r.run("component.klein_g01", [] {
    const auto c = component(klein_projection(), 1);
    return Outcome(c.members == std::vector<Elem>{1, 3} && c.idempotent == 1 && c.checks.ok());
  });
  r.run("decompose.klein_projection", [] {
    const auto d = decompose(klein_projection());
    return Outcome(d.checks.ok() && d.components.size() == 2 && d.idempotents == std::vector<Elem>{0, 1} &&
                   d.sub_adjacent_group.size() * d.idempotents.size() == 4);
  });
  r.run("decompose.post_group", [] {
    const auto d = decompose(trivial_post_group(symmetric_group(3)));
    bool ok = d.checks.ok() && d.components.size() == 1 && d.idempotents == std::vector<Elem>{0};
    for (Elem a = 0; a < 6; ++a) ok = ok && d.psi_group[a] == a && d.psi_idempotent[a] == 0;
    return Outcome(ok);
  });
  r.run("decompose.z4_brace", [] {
    const auto d = decompose(z4_brace());
    return Outcome(d.checks.ok() && d.components.size() == 1);
  });
  r.run("cocycle.klein_projection", [] {
    const auto t = klein_projection();
    return Outcome(cocycle_lemmas(t).ok() && t.phi().after(t.phi()) == t.phi() && t.phi()[0] == 0);
  });
  r.run("cocycle.post_group", [] { return Outcome(cocycle_lemmas(trivial_post_group(cyclic_group(4))).ok()); });
  r.run("cocycle.z2_shifted", [] {
    const auto t = truss_to_weak_tpg(make_truss(cyclic_group(2), table_of(2, [](Elem a, Elem b) { return (a + b + 1) % 2; }),
                                                MapTable(std::vector<Elem>{1, 0})));
    return Outcome(cocycle_lemmas(t).ok() && t.phi().after(t.phi()) != t.phi() && t.phi()[0] == 1);
  });
  r.run("tpg_hom.identity", [] {
    const auto t = klein_projection();
    return Outcome(tpg_homomorphism_check(MapTable::identity(4), t, t).ok());
  });
  r.run("tpg_hom.klein_swap", [] {
    const auto t = klein_projection();
    const Report rep = tpg_homomorphism_check(MapTable(std::vector<Elem>{0, 2, 1, 3}), t, t);
    const Check* c = rep.find("phi_compatible");
    return Outcome(!rep.ok() && c && !c->ok && !c->witness.empty());
  });
  r.run("tpg_hom.phi_as_map", [] {
    const auto t = klein_projection();
    return Outcome(tpg_homomorphism_check(t.phi(), t, t).ok());
  });
}

void truss(Runner& r) {
  const auto shifted = table_of(2, [](Elem a, Elem b) { return (a + b + 1) % 2; });
  r.run("truss.group_as_truss", [] {
    const auto g = symmetric_group(3);
    return Outcome(verify_truss(g, g.mul(), MapTable::identity(6)).ok());
  });
  r.run("truss.z2_shifted", [&] {
    return Outcome(verify_truss(cyclic_group(2), shifted, MapTable(std::vector<Elem>{1, 0})).ok());
  });
  r.run("truss.z2_shifted_wrong_phi", [&] {
    const Report rep = verify_truss(cyclic_group(2), shifted, MapTable::identity(2));
    const Check* f = rep.first_failure();
    return Outcome(f && f->name == "left_distributive" && !f->witness.empty());
  });
  r.run("tpg_to_truss.post_group_z3", [] {
    const auto s = tpg_to_truss(trivial_post_group(cyclic_group(3)));
    return Outcome(s.circ == s.group.mul() && s.phi == MapTable::identity(3));
  });
  r.run("tpg_to_truss.klein_projection", [] {
    const auto t = klein_projection();
    const auto s = tpg_to_truss(t);
    const auto& g = t.group();
    return Outcome(s.circ == table_of(4, [&](Elem a, Elem b) { return g.op(t.phi()[a], b); }) &&
                   verify_truss(g, s.circ, s.phi).ok());
  });
  r.run("tpg_to_truss.z3_field", [] {
    const auto s = tpg_to_truss(z3_field());
    return Outcome(s.circ == table_of(3, [](Elem a, Elem b) { return a * b % 3; }) &&
                   verify_truss(s.group, s.circ, s.phi, s.two_sided).ok());
  });
  r.run("truss_to_tpg.group_z4", [] {
    const auto g = cyclic_group(4);
    const auto t = truss_to_weak_tpg(make_truss(g, g.mul(), MapTable::identity(4)));
    return Outcome(t.tri() == trivial_tri(4) && t.kind() == Kind::LeftTwisted);
  });
  r.run("truss_to_tpg.z2_shifted", [&] {
    const auto t = truss_to_weak_tpg(make_truss(cyclic_group(2), shifted, MapTable(std::vector<Elem>{1, 0})));
    return Outcome(t.tri() == trivial_tri(2) && t.phi() == MapTable(std::vector<Elem>{1, 0}) &&
                   t.kind() == Kind::LeftTwisted);
  });
  r.run("truss_to_tpg.z3_multiplicative", [] {
    const auto f = z3_field();
    const auto t = truss_to_weak_tpg(tpg_to_truss(f));
    return Outcome(t.tri() == f.tri() && t.phi() == f.phi() && t.kind() == Kind::LeftWeak);
  });
  r.run("roundtrip.klein_projection", [] { return Outcome(roundtrip_check(klein_projection())); });
  r.run("roundtrip.z2_shifted", [&] {
    return Outcome(roundtrip_check(make_truss(cyclic_group(2), shifted, MapTable(std::vector<Elem>{1, 0}))));
  });
  r.run("roundtrip.trivial_group", [] { return Outcome(roundtrip_check(trivial_post_group(cyclic_group(1)))); });
  r.run("divisible.z2_shifted", [&] {
    return Outcome(is_right_divisible(make_truss(cyclic_group(2), shifted, MapTable(std::vector<Elem>{1, 0}))).ok);
  });
  r.run("divisible.z3_multiplicative", [] {
    const auto d = is_right_divisible(tpg_to_truss(z3_field()));
    return Outcome(!d.ok && d.witness == Elem{0});
  });
  r.run("divisible.group_as_truss", [] {
    const auto g = symmetric_group(3);
    return Outcome(is_right_divisible(make_truss(g, g.mul(), MapTable::identity(6))).ok);
  });
}

void rota_baxter(Runner& r) {
  r.run("rbs.id_and_one_s3", [] {
    const auto g = symmetric_group(3);
    return Outcome(verify_rbs(g, MapTable::identity(6), MapTable(6, g.identity())).ok());
  });
  r.run("rbs.one_and_id_z4", [] {
    return Outcome(verify_rbs(cyclic_group(4), MapTable(4, 0), MapTable::identity(4)).ok());
  });
  // Both sides of the B2 axiom read b a here, so this holds on any group.
  r.run("rbs.one_and_id_s3", [] {
    return Outcome(verify_rbs(symmetric_group(3), MapTable(6, 0), MapTable::identity(6)).ok());
  });
  r.run("rbs.id_and_id_s3_fails", [] {
    const Report rep = verify_rbs(symmetric_group(3), MapTable::identity(6), MapTable::identity(6));
    const Check* f = rep.first_failure();
    return Outcome(f && f->name == "b1_axiom" && f->witness.size() == 2, f ? f->name : "");
  });
  r.run("rbs.random_z2_failure", [] {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> bit(0, 1);
    const auto g = cyclic_group(2);
    for (int trial = 0; trial < 1000; ++trial) {
      MapTable b1(2), b2(2);
      for (Elem a = 0; a < 2; ++a) {
        b1[a] = static_cast<Elem>(bit(rng));
        b2[a] = static_cast<Elem>(bit(rng));
      }
      const Report rep = verify_rbs(g, b1, b2);
      if (const Check* f = rep.first_failure()) return Outcome(f->witness.size() == 2, fmt::format("trial {}", trial));
    }
    return Outcome(false, "no failing draw");
  });
  r.run("rbs_to_tpg.id_and_one", [] {
    const auto g = symmetric_group(3);
    const auto t = rbs_to_tpg(make_rbs(g, MapTable::identity(6), MapTable(6, 0)));
    return Outcome(t.tri() == trivial_tri(6) && t.phi() == MapTable::identity(6));
  });
  r.run("rbs_to_tpg.one_and_id_z4", [] {
    const auto t = rbs_to_tpg(make_rbs(cyclic_group(4), MapTable(4, 0), MapTable::identity(4)));
    return Outcome(t.tri() == trivial_tri(4) && t.phi() == MapTable::identity(4) && t.kind() == Kind::LeftTwisted);
  });
  r.run("rbs_to_tpg.s3_search", [] {
    EnumerationTask task;
    task.group = "symmetric(3)";
    std::size_t found = 0;
    for (const auto& t : enumerate_tpg(task).structures) {
      const auto rec = reconstruct_rbs(t);
      if (rec.not_inner) return Outcome(false, "S3 automorphism not inner");
      for (const auto& s : rec.solutions) {
        if (!verify_rbs(s.group, s.b1, s.b2).ok() || rbs_to_tpg(s).kind() != Kind::LeftTwisted) return Outcome(false);
        ++found;
      }
    }
    return Outcome(found > 0, fmt::format("{} systems", found));
  });
  r.run("rbs_to_right_tpg.id_and_one_s3", [] {
    const auto g = symmetric_group(3);
    const auto t = rbs_to_right_tpg(make_rbs(g, MapTable::identity(6), MapTable(6, 0)));
    const auto expected = table_of(6, [&](Elem a, Elem b) { return g.op(g.op(b, a), g.inv(b)); });
    return Outcome(classify_right(g, t.tri_right(), t.phi()).twisted() && t.tri_right() == expected &&
                   t.phi() == MapTable::identity(6));
  });
  r.run("rbs_to_right_tpg.trivial_group", [] {
    const auto t = rbs_to_right_tpg(make_rbs(cyclic_group(1), MapTable(1, 0), MapTable(1, 0)));
    return Outcome(t.tri_right() == OpTable(1, 0) && t.phi() == MapTable(1, 0));
  });
  r.run("rbs_to_right_tpg.one_and_id_z4", [] {
    const auto g = cyclic_group(4);
    const auto t = rbs_to_right_tpg(make_rbs(g, MapTable(4, 0), MapTable::identity(4)));
    return Outcome(classify_right(g, t.tri_right(), t.phi()).twisted() &&
                   t.tri_right() == table_of(4, [](Elem a, Elem) { return a; }) && t.phi() == MapTable::identity(4));
  });
  r.run("reconstruct.trivial_z4", [] {
    const auto rec = reconstruct_rbs(trivial_post_group(cyclic_group(4)));
    bool has = false;
    for (const auto& s : rec.solutions) has = has || (s.b2 == MapTable(4, 0) && s.b1 == MapTable::identity(4));
    return Outcome(has && !rec.not_inner);
  });
  r.run("reconstruct.klein_projection", [] {
    const auto t = klein_projection();
    const auto rec = reconstruct_rbs(t);
    bool has = false;
    for (const auto& s : rec.solutions) has = has || (s.b2 == MapTable(4, 0) && s.b1 == t.phi());
    return Outcome(has && verify_rbs(t.group(), t.phi(), MapTable(4, 0)).ok());
  });
  r.run("reconstruct.klein_cyclic_not_inner", [] {
    const auto rec = reconstruct_rbs(klein_cyclic());
    return Outcome(rec.not_inner.has_value() && rec.solutions.empty(),
                   rec.not_inner ? fmt::format("witness {}", *rec.not_inner) : "");
  });
}

void brace(Runner& r) {
  r.run("transform.post_group", [] {
    const auto t = trivial_post_group(symmetric_group(3), false);
    const auto u = idempotent_transform(t);
    return Outcome(u.tri() == t.tri() && u.phi() == t.phi());
  });
  r.run("transform.klein_projection", [] {
    const auto t = klein_projection();
    const auto u = idempotent_transform(t);
    return Outcome(u.tri() == t.tri() && u.phi() == t.phi() && sub_adjacent(t).dagger_at(0) == 0);
  });
  r.run("transform.z2_shifted", [] {
    const auto t = z2_shifted();
    const auto u = idempotent_transform(t);
    return Outcome(t.phi().after(t.phi()) != t.phi() && u.phi().after(u.phi()) == u.phi() &&
                   u.kind() == Kind::LeftTwisted);
  });
  r.run("skew_brace.post_group", [] {
    const auto t = trivial_post_group(symmetric_group(3), false);
    const auto b = to_skew_brace(t);
    return Outcome(b.circ == sub_adjacent(t).circ && verify_brace(b.group, b.circ, b.side).ok());
  });
  r.run("skew_brace.z4", [] {
    const auto t = z4_brace();
    const auto b = to_skew_brace(t);
    return Outcome(b.circ == sub_adjacent(t).circ && verify_brace(b.group, b.circ, BraceSide::TwoSided).ok());
  });
  r.run("skew_brace.klein_not_surjective", [] {
    return Outcome(thrown_code([] { to_skew_brace(klein_projection()); }) == ErrorCode::CocycleNotSurjective);
  });
  r.run("two_sided_brace.z4", [] {
    const auto b = two_sided_brace(z4_brace());
    return Outcome(b.side == BraceSide::TwoSided && verify_brace(b.group, b.circ, b.side).ok());
  });
  r.run("two_sided_brace.trivial_s3", [] {
    const auto b = two_sided_brace(trivial_post_group(symmetric_group(3)));
    return Outcome(verify_brace(b.group, b.circ, b.side).ok());
  });
  r.run("two_sided_brace.trivial_z2", [] {
    const auto b = two_sided_brace(trivial_post_group(cyclic_group(2)));
    return Outcome(verify_brace(b.group, b.circ, b.side).ok());
  });
  r.run("ring.z4", [] {
    const auto ring = to_radical_ring(z4_brace());
    bool ok = ring.star == table_of(4, [](Elem a, Elem b) { return 2 * a * b % 4; }) &&
              verify_radical_ring(ring.add.mul(), ring.star).ok();
    for (Elem a = 0; a < 4; ++a) {
      const Elem b = ring.radical_witness[a];
      ok = ok && (a + b + ring.star(a, b)) % 4 == 0;
    }
    return Outcome(ok);
  });
  r.run("ring.trivial_zn", [] {
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto ring = to_radical_ring(trivial_post_group(cyclic_group(n)));
      ok = ok && ring.star == OpTable(n, 0);
      for (Elem a = 0; a < n; ++a) ok = ok && ring.radical_witness[a] == (n - a) % n;
    }
    return Outcome(ok);
  });
  r.run("trivial_cocycle.z3_field", [] {
    const Report rep = trivial_cocycle_check(z3_field());
    return Outcome(rep.ok(), rep.checks[0].detail);
  });
  r.run("trivial_cocycle.order_one", [] {
    const auto t = trivial_post_group(cyclic_group(1));
    const Report rep = trivial_cocycle_check(t);
    return Outcome(rep.ok() && t.is_twisted() && rep.find("trivial_cocycle_iff_zero_ring"));
  });
  r.run("trivial_cocycle.z4", [] { return Outcome(trivial_cocycle_check(z4_brace()).ok()); });
  r.run("ybe.conjugation_s3", [] {
    const auto g = symmetric_group(3);
    const auto s = yang_baxter_map(trivial_post_group(g));
    bool ok = verify_ybe(s).ok();
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) ok = ok && s(a, b) == std::pair<Elem, Elem>{b, g.conjugate(b, a)};
    return Outcome(ok);
  });
  r.run("ybe.abelian_swap", [] {
    const auto s = yang_baxter_map(trivial_post_group(cyclic_group(5)));
    bool ok = true;
    for (Elem a = 0; a < 5; ++a)
      for (Elem b = 0; b < 5; ++b) ok = ok && s(a, b) == std::pair<Elem, Elem>{b, a};
    return Outcome(ok);
  });
  r.run("ybe.z4_brace", [] { return Outcome(verify_ybe(yang_baxter_map(z4_brace())).ok()); });
}

TwistedPostLieAlgebra lie_zero(std::size_t d) {
  TwistedPostLieAlgebra L;
  L.dim = d;
  L.bracket = StructureTensor(d);
  L.tri = StructureTensor(d);
  L.phi = zero_matrix(d);
  return L;
}

TwistedPostLieAlgebra lie_pre_lie_point() {
  auto L = lie_zero(1);
  L.tri.at(0, 0, 0) = 1;
  L.phi = identity_matrix(1);
  return L;
}

TwistedPostLieAlgebra lie_d2(const Matrix& phi) {
  auto L = lie_zero(2);
  L.tri.at(0, 0, 1) = 1;
  L.phi = phi;
  return L;
}

void lie(Runner& r) {
  r.run("tpla.zero", [] { return Outcome(verify_tpla(lie_zero(1)).ok()); });
  r.run("tpla.pre_lie_point", [] { return Outcome(verify_tpla(lie_pre_lie_point()).ok()); });
  r.run("tpla.d2_example", [] { return Outcome(verify_tpla(lie_d2(identity_matrix(2))).ok()); });
  r.run("bracket.zero", [] { return Outcome(sub_adjacent_bracket(lie_zero(2)).bracket.is_zero()); });
  r.run("bracket.pre_lie_point", [] {
    const auto b = sub_adjacent_bracket(lie_pre_lie_point());
    return Outcome(b.bracket.is_zero() && b.checks.ok());
  });
  r.run("bracket.d2_example", [] {
    const auto b = sub_adjacent_bracket(lie_d2(identity_matrix(2)));
    // [e1,e2] = e1|>e2 - e2|>e1 = 0 and [e1,e1] = 0
    return Outcome(b.bracket.is_zero() && b.checks.passed("jacobi"));
  });
  r.run("image.phi_zero", [] {
    const auto im = phi_image_subalgebra(lie_zero(2));
    return Outcome(im.basis.empty() && im.checks.ok());
  });
  r.run("image.phi_identity", [] {
    const auto im = phi_image_subalgebra(lie_d2(identity_matrix(2)));
    return Outcome(im.basis.size() == 2 && im.checks.ok());
  });
  r.run("image.rank_one", [] {
    Matrix p = zero_matrix(2);
    p[0][0] = 1;
    const auto L = lie_d2(p);
    if (!verify_tpla(L).ok()) return Outcome(true, "discarded by verify_tpla");
    const auto im = phi_image_subalgebra(L);
    return Outcome(im.basis.size() == 1 && im.checks.ok());
  });
  r.run("search.d1_contains_zero", [] {
    const auto hits = random_tpla_search(1, 0, 1000);
    bool has = false;
    for (const auto& L : hits) has = has || (L.bracket.is_zero() && L.tri.is_zero() && L.phi == zero_matrix(1));
    return Outcome(has);
  });
  r.run("search.d2_reverify", [] {
    const auto hits = random_tpla_search(2, 0, 10'000);
    bool ok = !hits.empty();
    for (const auto& L : hits) ok = ok && verify_tpla(L).ok() && sub_adjacent_bracket(L).checks.ok();
    return Outcome(ok, fmt::format("{} hits", hits.size()));
  });
  r.run("search.zero_budget", [] { return Outcome(random_tpla_search(2, 7, 0).empty()); });
}

void hopf(Runner& r) {
  r.run("linearize.trivial_z2", [] { return Outcome(linearize(trivial_post_group(cyclic_group(2))).checks().ok()); });
  r.run("linearize.klein_projection", [] { return Outcome(linearize(klein_projection()).checks().ok()); });
  r.run("linearize.z2_shifted", [] {
    return Outcome(thrown_code([] { linearize(z2_shifted()); }) == ErrorCode::CocycleNotNormalized);
  });
  r.run("hopf_truss.trivial_z3", [] { return Outcome(hopf_truss_roundtrip(linearize(trivial_post_group(cyclic_group(3)))).ok()); });
  r.run("hopf_truss.klein_projection", [] { return Outcome(hopf_truss_roundtrip(linearize(klein_projection())).ok()); });
  r.run("hopf_truss.z4_brace", [] { return Outcome(hopf_truss_roundtrip(linearize(z4_brace())).ok()); });
  r.run("antipode.trivial", [] {
    const auto g = symmetric_group(3);
    const auto s = sub_adjacent_hopf(linearize(trivial_post_group(g)));
    return Outcome(s.checks.ok() && s.antipode == g.inverses());
  });
  r.run("antipode.klein_projection", [] {
    const auto s = sub_adjacent_hopf(linearize(klein_projection()));
    bool ok = s.checks.ok() && s.basis == std::vector<Elem>{0, 2};
    for (Elem g : s.basis) ok = ok && s.antipode[g] == g;
    return Outcome(ok);
  });
  r.run("antipode.z4_brace", [] {
    const auto t = z4_brace();
    const auto s = sub_adjacent_hopf(linearize(t));
    const auto circ = sub_adjacent(t).circ;
    bool ok = s.checks.ok();
    for (Elem g = 0; g < 4; ++g) ok = ok && circ(g, s.antipode[g]) == 0 && circ(s.antipode[g], g) == 0;
    return Outcome(ok);
  });
  r.run("group_likes.corpus", [] {
    bool ok = true;
    for (const auto& e : builtin_corpus()) {
      if (!e.t.is_twisted() || !e.t.is_left_kind() || e.t.phi()[e.t.group().identity()] != e.t.group().identity()) continue;
      const auto gl = group_likes(linearize(e.t));
      ok = ok && gl.checks.ok() && gl.elements.size() == e.t.order();
    }
    return Outcome(ok);
  });
}

void enumeration(Runner& r) {
  r.run("enumerate.z2_twisted", [] {
    EnumerationTask task;
    task.group = "cyclic(2)";
    const auto res = enumerate_tpg(task);
    const auto trivial = canonical_form(trivial_post_group(cyclic_group(2), false));
    bool has = false;
    for (const auto& e : res.entries) has = has || e.form == trivial;
    const auto [twisted, weak] = naive_left_counts(cyclic_group(2));
    return Outcome(has && res.labeled_count == twisted && !res.truncated,
                   fmt::format("{} labeled, {} classes", res.labeled_count, res.entries.size()));
  });
  r.run("enumerate.z2_weak", [] {
    EnumerationTask task;
    task.group = "cyclic(2)";
    const std::size_t twisted = enumerate_tpg(task).entries.size();
    task.weak = true;
    const auto res = enumerate_tpg(task);
    const auto counts = naive_left_counts(cyclic_group(2));
    return Outcome(res.entries.size() > twisted && res.labeled_count == counts.second,
                   fmt::format("{} weak classes vs {} twisted", res.entries.size(), twisted));
  });
  r.run("enumerate.klein_projection_member", [] {
    EnumerationTask task;
    task.group = "klein_four";
    const auto target = canonical_form(klein_projection());
    for (const auto& e : enumerate_tpg(task).entries)
      if (e.form == target) return Outcome(true);
    return Outcome(false);
  });
  r.run("catalog.roundtrip", [] {
    EnumerationTask task;
    task.group = "cyclic(3)";
    const auto entries = enumerate_tpg(task).entries;
    const auto path = std::filesystem::temp_directory_path() / fmt::format("twistpost_selftest_{}.ndjson", ::getpid());
    std::filesystem::remove(path);
    catalog_store(path.string(), entries);
    const auto loaded = catalog_load(path.string());
    std::filesystem::remove(path);
    bool same = loaded.size() == entries.size();
    for (std::size_t i = 0; same && i < loaded.size(); ++i) same = to_json(loaded[i]) == to_json(entries[i]);
    return Outcome(same);
  });
  r.run("catalog.corrupted_entry", [] {
    const auto e = make_entry(klein_projection(), "builtin:klein_projection");
    Json j = to_json(e);
    j["tri"][1][2] = 3;
    const auto path = std::filesystem::temp_directory_path() / fmt::format("twistpost_selftest_bad_{}.ndjson", ::getpid());
    {
      std::ofstream out(path);
      out << j.dump() << '\n';
    }
    std::string message;
    const auto code = [&]() -> std::optional<ErrorCode> {
      try {
        catalog_load(path.string());
      } catch (const Error& err) {
        message = err.what();
        return err.code();
      }
      return std::nullopt;
    }();
    std::filesystem::remove(path);
    return Outcome(code == ErrorCode::VerificationMismatch && message.find(e.id) != std::string::npos, message);
  });
  r.run("catalog.empty_file", [] {
    const auto path = std::filesystem::temp_directory_path() / fmt::format("twistpost_selftest_empty_{}.ndjson", ::getpid());
    { std::ofstream out(path); }
    const auto loaded = catalog_load(path.string());
    std::filesystem::remove(path);
    return Outcome(loaded.empty());
  });
}

}  // namespace

Report run_selftest() {
  Runner r;
  groups(r);
  tpg(r);
  truss(r);
  rota_baxter(r);
  brace(r);
  lie(r);
  hopf(r);
  enumeration(r);
  return std::move(r.report);
}

}  // namespace twistpost
