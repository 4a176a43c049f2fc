// One line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include <fmt/core.h>

#include "oracle.hpp"
#include "support.hpp"
#include "twistpost/brace.hpp"
#include "twistpost/catalog.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"
#include "twistpost/hopf.hpp"
#include "twistpost/lie.hpp"
#include "twistpost/rota_baxter.hpp"
#include "twistpost/truss.hpp"

using namespace twistpost;

namespace {

// Wall-clock limits in seconds; 0 means untimed.
constexpr double kLawsSeconds = 10.0;
constexpr double kBraceSeconds = 5.0;
constexpr double kOracleSeconds = 60.0;
constexpr int kMutationTrials = 100;
constexpr std::uint64_t kMutationSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

bool left_twisted(const TwistedPostGroup& t) {
  return t.has_left() && classify(t.group(), t.tri(), t.phi()).twisted();
}

std::vector<TwistedPostGroup> corpus() {
  std::vector<TwistedPostGroup> out;
  for (auto& e : builtin_corpus()) out.push_back(std::move(e.t));
  return out;
}

const char* const kSmallGroups[] = {"cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "klein_four",
                                    "cyclic(5)", "cyclic(6)", "symmetric(3)"};

std::vector<TwistedPostGroup> enumerated(bool weak) {
  std::vector<TwistedPostGroup> out;
  for (const char* spec : kSmallGroups) {
    EnumerationTask task;
    task.group = spec;
    task.weak = weak;
    for (auto& t : enumerate_tpg(task).structures) out.push_back(std::move(t));
  }
  return out;
}

// Corpus plus every enumerated structure of order <= 6, left side twisted.
std::vector<TwistedPostGroup> twisted_instances() {
  std::vector<TwistedPostGroup> out;
  for (auto& t : corpus())
    if (left_twisted(t)) out.push_back(std::move(t));
  for (auto& t : enumerated(false)) out.push_back(std::move(t));
  return out;
}

Outcome laws() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& t : twisted_instances()) {
    const auto r = check_subadjacent_laws(t);
    if (r.checks.size() < 8) o.fail("fewer than eight laws checked");
    if (!r.ok()) o.fail(r.failure_message());
    ++n;
  }
  o.detail = o.ok ? fmt::format("{} instances", n) : o.detail;
  return o;
}

Outcome decomposition() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& t : twisted_instances()) {
    const auto d = decompose(t);
    if (!d.checks.ok()) o.fail(d.checks.failure_message());
    std::vector<int> hits(t.order(), 0);
    for (const auto& c : d.components)
      for (Elem x : c) ++hits[x];
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) o.fail("components do not partition G");
    if (d.sub_adjacent_group.size() * d.idempotents.size() != t.order()) o.fail("|G1| |K| != |G|");
    // (a o e_1, e_a) determines a, and products go to (a1 o a2, e_a2)
    const auto sa = sub_adjacent(t);
    std::set<std::pair<Elem, Elem>> image;
    for (Elem a = 0; a < t.order(); ++a) {
      image.insert({d.psi_group[a], d.psi_idempotent[a]});
      for (Elem b = 0; b < t.order(); ++b) {
        const Elem ab = t.circ(a, b);
        if (d.psi_group[ab] != sa.circ(d.psi_group[a], d.psi_group[b]) || d.psi_idempotent[ab] != d.psi_idempotent[b])
          o.fail(fmt::format("Psi not multiplicative at ({},{})", a, b));
      }
    }
    if (image.size() != t.order()) o.fail("Psi not injective");
    ++n;
  }
  o.detail = o.ok ? fmt::format("{} instances", n) : o.detail;
  return o;
}

Outcome category() {
  Outcome o;
  std::size_t n = 0;
  bool saw_false = false;
  auto instances = corpus();
  for (const char* spec : {"cyclic(3)", "klein_four", "symmetric(3)"}) {
    EnumerationTask task;
    task.group = spec;
    task.weak = true;
    for (auto& t : enumerate_tpg(task).structures) instances.push_back(std::move(t));
  }
  for (const auto& t : instances) {
    if (!t.has_left()) continue;
    const auto s = tpg_to_truss(t);
    const auto back = truss_to_weak_tpg(s);
    if (back.tri() != t.tri() || back.phi() != t.phi()) o.fail("TPG -> truss -> TPG changed the tables");
    const auto again = tpg_to_truss(back);
    if (again.circ != s.circ || again.phi != s.phi) o.fail("truss -> TPG -> truss changed the tables");
    if (!roundtrip_check(t) || !roundtrip_check(s)) o.fail("roundtrip_check false");
    const bool divisible = is_right_divisible(s).ok;
    if (divisible != left_twisted(t)) o.fail("divisibility and twistedness disagree");
    saw_false = saw_false || !divisible;
    ++n;
  }
  if (is_right_divisible(tpg_to_truss(z3_field())).ok) o.fail("Z3 multiplicative truss is divisible");
  if (!saw_false) o.fail("no non-divisible case seen");
  o.detail = o.ok ? fmt::format("{} instances", n) : o.detail;
  return o;
}

Outcome rota_baxter() {
  Outcome o;
  std::size_t systems = 0, inner = 0;
  auto check_system = [&](const RotaBaxterSystem& r) {
    const auto t = rbs_to_tpg(r);
    if (!left_twisted(t)) o.fail("rbs_to_tpg output is not LeftTwisted");
    ++systems;
  };
  // every system on Z2 and Z3
  for (std::size_t n : {2u, 3u}) {
    const auto g = cyclic_group(n);
    std::size_t maps = 1;
    for (std::size_t i = 0; i < n; ++i) maps *= n;
    auto decode = [&](std::size_t x) {
      std::vector<Elem> v(n);
      for (auto& e : v) e = static_cast<Elem>(x % n), x /= n;
      return MapTable(v);
    };
    for (std::size_t i = 0; i < maps; ++i)
      for (std::size_t j = 0; j < maps; ++j)
        if (verify_rbs(g, decode(i), decode(j)).ok()) check_system(make_rbs(g, decode(i), decode(j)));
  }
  for (const auto& t : twisted_instances()) {
    if (t.order() > 6) continue;
    const auto rec = reconstruct_rbs(t);
    if (rec.not_inner) continue;
    ++inner;
    if (rec.solutions.empty()) o.fail("all-inner instance without a system");
    for (const auto& r : rec.solutions) {
      check_system(r);
      const auto back = rbs_to_tpg(r);
      if (back.tri() != t.tri() || back.phi() != t.phi()) o.fail("reconstructed system does not reproduce the tables");
    }
  }
  // Klein four with a non-inner L_a
  const auto nc = reconstruct_rbs(klein_cyclic());
  if (!nc.not_inner || !nc.solutions.empty()) o.fail("klein_cyclic reconstructed");
  o.detail = o.ok ? fmt::format("{} systems, {} all-inner instances", systems, inner) : o.detail;
  return o;
}

Outcome brace() {
  Outcome o;
  for (const auto& t : twisted_instances()) {
    const auto u = idempotent_transform(t);
    if (u.phi().after(u.phi()) != u.phi()) o.fail("Psi o Psi != Psi");
  }
  const auto z4 = z4_brace();
  const auto b = two_sided_brace(z4);
  if (!verify_brace(b.group, b.circ, BraceSide::TwoSided).ok()) o.fail("Z4 brace fails");
  const auto ring = to_radical_ring(z4);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem x = 0; x < 4; ++x)
      if (ring.star(a, x) != (2 * a * x) % 4) o.fail(fmt::format("star({},{}) != 2ab", a, x));
    const Elem w = ring.radical_witness[a];
    if ((a + w + ring.star(a, w)) % 4 != 0) o.fail(fmt::format("bad radical witness for {}", a));
  }
  if (!verify_radical_ring(ring.add.mul(), ring.star).ok()) o.fail("radical ring fails");
  const auto y = yang_baxter_map(trivial_post_group(symmetric_group(3)));
  if (!verify_ybe(y).ok()) o.fail(verify_ybe(y).failure_message());
  if (!oracle::braid(6, [&](unsigned p, unsigned q) {
        const auto [u, v] = y(p, q);
        return std::pair<unsigned, unsigned>{u, v};
      }))
    o.fail("independent braid check fails");
  if (o.ok) o.detail = "Z4 brace, ring 2ab, S3 braid on 216 triples";
  return o;
}

std::vector<TwistedPostLieAlgebra> lie_instances() {
  auto zero = [](std::size_t d) {
    TwistedPostLieAlgebra L;
    L.dim = d;
    L.bracket = StructureTensor(d);
    L.tri = StructureTensor(d);
    L.phi = zero_matrix(d);
    return L;
  };
  std::vector<TwistedPostLieAlgebra> out{zero(1)};
  auto pre = zero(1);
  pre.tri.at(0, 0, 0) = 1;
  pre.phi = identity_matrix(1);
  out.push_back(pre);
  auto two = zero(2);
  two.tri.at(0, 0, 1) = 1;
  two.phi = identity_matrix(2);
  out.push_back(two);
  for (std::size_t d : {1u, 2u})
    for (auto& L : random_tpla_search(d, 0, 10'000)) out.push_back(std::move(L));
  return out;
}

Outcome lie() {
  Outcome o;
  const auto all = lie_instances();
  for (const auto& L : all) {
    const auto v = verify_tpla(L);
    if (!v.ok()) {
      o.fail(v.failure_message());
      continue;
    }
    const auto b = sub_adjacent_bracket(L);
    for (const char* name : {"antisymmetric", "jacobi", "fixed_by_phi"})
      if (!b.checks.passed(name)) o.fail(std::string("sub-adjacent ") + name);
    if (!phi_image_subalgebra(L).checks.ok()) o.fail("phi image not closed");
  }
  o.detail = o.ok ? fmt::format("{} instances", all.size()) : o.detail;
  return o;
}

Outcome hopf() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& t : twisted_instances()) {
    if (t.phi()[t.group().identity()] != t.group().identity()) continue;
    const auto h = linearize(t);
    for (const char* name : {"TPHA1", "TPHA2", "TPHA3"})
      if (!h.checks().passed(name)) o.fail(name);
    if (!hopf_truss_roundtrip(h).ok()) o.fail("hopf truss roundtrip");
    const auto s = sub_adjacent_hopf(h);
    if (!s.checks.passed("antipode_left") || !s.checks.passed("antipode_right")) o.fail("antipode laws");
    const auto sa = sub_adjacent(t);
    for (Elem g : s.basis)
      if (s.antipode[g] != sa.dagger_at(g)) o.fail("antipode is not the dagger");
    const auto gl = group_likes(h);
    if (!gl.rebuilt || gl.rebuilt->tri() != t.tri() || gl.rebuilt->phi() != t.phi()) o.fail("group-likes differ");
    ++n;
  }
  o.detail = o.ok ? fmt::format("{} normalized instances", n) : o.detail;
  return o;
}

Outcome enumeration(double& oracle_seconds) {
  Outcome o;
  for (std::size_t n : {2u, 3u}) {
    const auto start = std::chrono::steady_clock::now();
    const auto bf = oracle::brute_force(oracle::cyclic(n));
    if (n == 3) oracle_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::pair<bool, bool> modes[] = {{false, false}, {false, true}, {true, false}, {true, true}};
    const oracle::Counts* want[] = {&bf.left_twisted, &bf.left_weak, &bf.two_sided_twisted, &bf.two_sided_weak};
    for (int m = 0; m < 4; ++m) {
      EnumerationTask task;
      task.group = fmt::format("cyclic({})", n);
      task.two_sided = modes[m].first;
      task.weak = modes[m].second;
      const auto r = enumerate_tpg(task);
      if (r.truncated || r.labeled_count != want[m]->labeled || r.entries.size() != want[m]->classes)
        o.fail(fmt::format("Z{} two_sided={} weak={}: {}/{} vs oracle {}/{}", n, task.two_sided, task.weak,
                           r.labeled_count, r.entries.size(), want[m]->labeled, want[m]->classes));
    }
  }
  if (oracle_seconds > kOracleSeconds) o.fail(fmt::format("oracle took {:.1f} s", oracle_seconds));
  if (o.ok) o.detail = fmt::format("oracle at n=3 in {:.2f} s", oracle_seconds);
  return o;
}

// Mutation trials

using Rng = std::mt19937_64;

Elem pick(Rng& rng, std::size_t n) { return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); }

// Changes one entry to a different value.
OpTable mutate(OpTable t, Rng& rng) {
  const std::size_t n = t.order();
  const Elem a = pick(rng, n), b = pick(rng, n);
  t.at(a, b) = static_cast<Elem>((t(a, b) + 1 + pick(rng, n - 1)) % n);
  return t;
}

bool has_witnessed_failure(const Report& r) {
  return std::any_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.ok && !c.witness.empty(); });
}

Report gate(const FiniteGroup& g, const OpTable& tri, const MapTable& phi) {
  Report r = classify(g, tri, phi).axioms;
  r.append(subadjacent_laws(g, tri, phi), "law.");
  return r;
}

struct Suite {
  const char* name;
  std::function<bool(Rng&)> trial;  // true when the mutation is caught with a witness
};

std::vector<TwistedPostGroup> order_at_least_3(const std::vector<TwistedPostGroup>& v) {
  std::vector<TwistedPostGroup> out;
  for (const auto& t : v)
    if (t.order() >= 3) out.push_back(t);
  return out;
}

Outcome mutation() {
  const auto twisted = order_at_least_3(twisted_instances());
  std::vector<TwistedPostGroup> normalized;
  for (const auto& t : twisted)
    if (t.phi()[t.group().identity()] == t.group().identity()) normalized.push_back(t);
  std::vector<SkewTruss> trusses;
  for (const auto& t : order_at_least_3(enumerated(true))) trusses.push_back(tpg_to_truss(t));
  std::vector<TwistedPostGroup> from_rbs;
  for (const auto& t : twisted)
    if (t.order() <= 6)
      for (const auto& r : reconstruct_rbs(t).solutions) from_rbs.push_back(rbs_to_tpg(r));
  std::vector<SkewBrace> braces;
  std::vector<RadicalRing> rings;
  std::vector<YBESolution> ybes;
  for (const auto& t : twisted) {
    const bool surjective = t.phi().image_size() == t.order();
    if (surjective) {
      braces.push_back(to_skew_brace(t));
      ybes.push_back(yang_baxter_map(t));
    }
    if (t.is_two_sided() && t.is_twisted() && t.group().is_abelian()) rings.push_back(to_radical_ring(t));
  }
  const auto lies = lie_instances();
  std::vector<CatalogEntry> entries;
  for (const auto& t : order_at_least_3(enumerated(false))) entries.push_back(make_entry(t, "acceptance"));

  auto any = [](auto& v, Rng& rng) -> decltype(auto) { return v[pick(rng, v.size())]; };
  auto tri_trial = [&](const std::vector<TwistedPostGroup>& pool) {
    return [&pool, any](Rng& rng) {
      const auto& t = any(pool, rng);
      return has_witnessed_failure(gate(t.group(), mutate(t.tri(), rng), t.phi()));
    };
  };

  const std::vector<Suite> suites = {
      {"laws", tri_trial(twisted)},
      {"decomposition", tri_trial(twisted)},
      {"truss",
       [&](Rng& rng) {
         const auto& s = any(trusses, rng);
         return has_witnessed_failure(verify_truss(s.group, mutate(s.circ, rng), s.phi));
       }},
      {"rota-baxter", tri_trial(from_rbs)},
      {"brace/ring/ybe",
       [&](Rng& rng) {
         switch (pick(rng, 3)) {
           case 0: {
             const auto& b = any(braces, rng);
             return has_witnessed_failure(verify_brace(b.group, mutate(b.circ, rng), b.side));
           }
           case 1: {
             const auto& r = any(rings, rng);
             return has_witnessed_failure(verify_radical_ring(r.add.mul(), mutate(r.star, rng)));
           }
           default: {
             auto y = any(ybes, rng);
             auto& cell = y.r[pick(rng, y.r.size())];
             if (pick(rng, 2) == 0)
               cell.first = static_cast<Elem>((cell.first + 1 + pick(rng, y.n - 1)) % y.n);
             else
               cell.second = static_cast<Elem>((cell.second + 1 + pick(rng, y.n - 1)) % y.n);
             return has_witnessed_failure(verify_ybe(y));
           }
         }
       }},
      {"lie",
       [&](Rng& rng) {
         auto L = any(lies, rng);
         const std::size_t d = L.dim;
         L.bracket.at(pick(rng, d), pick(rng, d), pick(rng, d)) += 1;
         return has_witnessed_failure(verify_tpla(L));
       }},
      {"hopf", tri_trial(normalized)},
      {"catalog",
       [&](Rng& rng) {
         auto e = any(entries, rng);
         e.form.tri = mutate(*e.form.tri, rng);
         try {
           entry_structure(e);
         } catch (const Error& err) {
           const std::string what = err.what();
           return err.code() == ErrorCode::VerificationMismatch && what.find(e.id) != std::string::npos &&
                  what.find(" at (") != std::string::npos;
         }
         return false;
       }},
  };

  Outcome o;
  std::string counts;
  Rng rng(kMutationSeed);
  for (const auto& s : suites) {
    int caught = 0;
    for (int i = 0; i < kMutationTrials; ++i) caught += s.trial(rng) ? 1 : 0;
    counts += fmt::format("{}{} {}/{}", counts.empty() ? "" : ", ", s.name, caught, kMutationTrials);
    if (caught != kMutationTrials) o.fail("");
  }
  o.detail = counts;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  double oracle_seconds = 0;
  const std::vector<Criterion> criteria = {
      {1, "sub-adjacent laws", kLawsSeconds, laws},
      {2, "decomposition", 0, decomposition},
      {3, "truss roundtrip and divisibility", 0, category},
      {4, "rota-baxter correspondence", 0, rota_baxter},
      {5, "brace, ring and braid relation", kBraceSeconds, brace},
      {6, "twisted post-Lie algebras", 0, lie},
      {7, "group algebra linearization", 0, hopf},
      {8, "enumeration against brute force", 0, [&] { return enumeration(oracle_seconds); }},
      {9, "mutation robustness", 0, mutation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) o.fail(fmt::format("took {:.2f} s, limit {:.0f} s", secs, c.limit));
    failures += o.ok ? 0 : 1;
    fmt::print("{} {}  {}  ({:.2f} s)  {}\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
