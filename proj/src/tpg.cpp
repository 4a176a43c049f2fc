#include "twistpost/tpg.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::LeftTwisted: return "LeftTwisted";
    case Kind::LeftWeak: return "LeftWeak";
    case Kind::RightTwisted: return "RightTwisted";
    case Kind::RightWeak: return "RightWeak";
    case Kind::TwoSidedTwisted: return "TwoSidedTwisted";
    case Kind::TwoSidedWeak: return "TwoSidedWeak";
  }
  return "?";
}

std::optional<Kind> kind_from_string(const std::string& s) {
  for (Kind k : {Kind::LeftTwisted, Kind::LeftWeak, Kind::RightTwisted, Kind::RightWeak, Kind::TwoSidedTwisted,
                 Kind::TwoSidedWeak})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

namespace {

void require_sizes(const FiniteGroup& g, const OpTable& op, const MapTable& phi) {
  if (op.order() != g.order() || phi.size() != g.order())
    throw Error(ErrorCode::DimensionMismatch, fmt::format("group order {}, table order {}, map size {}", g.order(),
                                                          op.order(), phi.size()));
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] >= g.order()) throw Error(ErrorCode::InvalidTable, fmt::format("phi[{}] out of range", i));
}

}  // namespace

OpTable left_circ(const FiniteGroup& g, const OpTable& tri, const MapTable& phi) {
  OpTable c(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) c.at(a, b) = g.op(phi[a], tri(a, b));
  return c;
}

OpTable right_circ(const FiniteGroup& g, const OpTable& tri_right, const MapTable& phi) {
  OpTable c(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) c.at(a, b) = g.op(tri_right(a, b), phi[b]);
  return c;
}

SideReport classify(const FiniteGroup& g, const OpTable& tri, const MapTable& phi) {
  require_sizes(g, tri, phi);
  const std::size_t n = g.order();
  const OpTable circ = left_circ(g, tri, phi);
  SideReport r;
  r.left = true;

  Check& endo = r.axioms.add("L1_endomorphism");
  for (Elem a = 0; a < n && endo.ok; ++a)
    for (Elem b = 0; b < n && endo.ok; ++b)
      for (Elem c = 0; c < n && endo.ok; ++c)
        if (tri(a, g.op(b, c)) != g.op(tri(a, b), tri(a, c))) endo = {endo.name, false, {a, b, c}, "a|>(bc) != (a|>b)(a|>c)"};

  Check& bij = r.axioms.add("L2_bijective");
  for (Elem a = 0; a < n && bij.ok; ++a) {
    std::vector<bool> seen(n, false);
    for (Elem b = 0; b < n; ++b) {
      if (seen[tri(a, b)]) {
        bij = {bij.name, false, {a}, "b -> a|>b is not injective"};
        break;
      }
      seen[tri(a, b)] = true;
    }
  }

  Check& assoc = r.axioms.add("L3_twisted_associativity");
  for (Elem a = 0; a < n && assoc.ok; ++a)
    for (Elem b = 0; b < n && assoc.ok; ++b)
      for (Elem c = 0; c < n && assoc.ok; ++c)
        if (tri(circ(a, b), c) != tri(a, tri(b, c))) assoc = {assoc.name, false, {a, b, c}, "(a o b)|>c != a|>(b|>c)"};

  Check& compat = r.axioms.add("L4_compatibility");
  for (Elem a = 0; a < n && compat.ok; ++a)
    for (Elem b = 0; b < n && compat.ok; ++b)
      if (phi[circ(a, b)] != circ(a, phi[b])) compat = {compat.name, false, {a, b}, "Phi(a o b) != a o Phi(b)"};
  return r;
}

SideReport classify_right(const FiniteGroup& g, const OpTable& tri_right, const MapTable& phi) {
  require_sizes(g, tri_right, phi);
  const std::size_t n = g.order();
  const OpTable circ = right_circ(g, tri_right, phi);
  const OpTable& tr = tri_right;
  SideReport r;
  r.left = false;

  Check& endo = r.axioms.add("R1_endomorphism");
  for (Elem b = 0; b < n && endo.ok; ++b)
    for (Elem a = 0; a < n && endo.ok; ++a)
      for (Elem c = 0; c < n && endo.ok; ++c)
        if (tr(g.op(a, c), b) != g.op(tr(a, b), tr(c, b))) endo = {endo.name, false, {b, a, c}, "(ac)<|b != (a<|b)(c<|b)"};

  Check& bij = r.axioms.add("R2_bijective");
  for (Elem b = 0; b < n && bij.ok; ++b) {
    std::vector<bool> seen(n, false);
    for (Elem a = 0; a < n; ++a) {
      if (seen[tr(a, b)]) {
        bij = {bij.name, false, {b}, "a -> a<|b is not injective"};
        break;
      }
      seen[tr(a, b)] = true;
    }
  }

  Check& assoc = r.axioms.add("R3_twisted_associativity");
  for (Elem a = 0; a < n && assoc.ok; ++a)
    for (Elem b = 0; b < n && assoc.ok; ++b)
      for (Elem c = 0; c < n && assoc.ok; ++c)
        if (tr(a, circ(b, c)) != tr(tr(a, b), c)) assoc = {assoc.name, false, {a, b, c}, "a<|(b o c) != (a<|b)<|c"};

  Check& compat = r.axioms.add("R4_compatibility");
  for (Elem a = 0; a < n && compat.ok; ++a)
    for (Elem b = 0; b < n && compat.ok; ++b)
      if (phi[circ(a, b)] != circ(phi[a], b)) compat = {compat.name, false, {a, b}, "Phi(a o b) != Phi(a) o b"};
  return r;
}

TwoSidedReport classify_two_sided(const FiniteGroup& g, const OpTable& tri, const OpTable& tri_right,
                                  const MapTable& phi) {
  TwoSidedReport r;
  r.left = classify(g, tri, phi);
  r.right = classify_right(g, tri_right, phi);
  r.abelian = g.is_abelian();
  const OpTable lc = left_circ(g, tri, phi);
  const OpTable rc = right_circ(g, tri_right, phi);
  r.same_circ.name = "same_sub_adjacent";
  for (Elem a = 0; a < g.order() && r.same_circ.ok; ++a)
    for (Elem b = 0; b < g.order() && r.same_circ.ok; ++b)
      if (lc(a, b) != rc(a, b)) {
        r.same_circ.ok = false;
        r.same_circ.witness = {a, b};
        r.same_circ.detail = "Phi(a)(a|>b) != (a<|b)Phi(b)";
      }
  if (r.same_circ.ok) {
    if (r.left.twisted() && r.right.twisted())
      r.kind = Kind::TwoSidedTwisted;
    else if (r.left.weak() && r.right.weak())
      r.kind = Kind::TwoSidedWeak;
  }
  return r;
}

namespace {

[[noreturn]] void reject(const Report& axioms) {
  throw Error(ErrorCode::NotATwistedPostGroup, axioms.failure_message());
}

}  // namespace

TwistedPostGroup TwistedPostGroup::left(FiniteGroup g, OpTable tri, MapTable phi) {
  const SideReport r = classify(g, tri, phi);
  if (!r.weak()) reject(r.axioms);
  TwistedPostGroup t;
  t.group_ = std::move(g);
  t.tri_ = std::move(tri);
  t.phi_ = std::move(phi);
  t.kind_ = r.twisted() ? Kind::LeftTwisted : Kind::LeftWeak;
  return t;
}

TwistedPostGroup TwistedPostGroup::right(FiniteGroup g, OpTable tri_right, MapTable phi) {
  const SideReport r = classify_right(g, tri_right, phi);
  if (!r.weak()) reject(r.axioms);
  TwistedPostGroup t;
  t.group_ = std::move(g);
  t.tri_right_ = std::move(tri_right);
  t.phi_ = std::move(phi);
  t.kind_ = r.twisted() ? Kind::RightTwisted : Kind::RightWeak;
  return t;
}

TwistedPostGroup TwistedPostGroup::two_sided(FiniteGroup g, OpTable tri, OpTable tri_right, MapTable phi) {
  const TwoSidedReport r = classify_two_sided(g, tri, tri_right, phi);
  if (!r.kind) {
    Report all;
    all.append(r.left.axioms);
    all.append(r.right.axioms);
    all.checks.push_back(r.same_circ);
    reject(all);
  }
  TwistedPostGroup t;
  t.group_ = std::move(g);
  t.tri_ = std::move(tri);
  t.tri_right_ = std::move(tri_right);
  t.phi_ = std::move(phi);
  t.kind_ = *r.kind;
  return t;
}

TwistedPostGroup TwistedPostGroup::from_tables(FiniteGroup g, std::optional<OpTable> tri,
                                               std::optional<OpTable> tri_right, MapTable phi) {
  if (tri && tri_right) return two_sided(std::move(g), std::move(*tri), std::move(*tri_right), std::move(phi));
  if (tri) return left(std::move(g), std::move(*tri), std::move(phi));
  if (tri_right) return right(std::move(g), std::move(*tri_right), std::move(phi));
  throw Error(ErrorCode::PreconditionFailed, "neither a left nor a right action table given");
}

const OpTable& TwistedPostGroup::tri() const {
  if (!tri_) throw Error(ErrorCode::PreconditionFailed, "structure has no left action");
  return *tri_;
}

const OpTable& TwistedPostGroup::tri_right() const {
  if (!tri_right_) throw Error(ErrorCode::PreconditionFailed, "structure has no right action");
  return *tri_right_;
}

bool TwistedPostGroup::is_left_kind() const {
  return kind_ == Kind::LeftTwisted || kind_ == Kind::LeftWeak || is_two_sided();
}

bool TwistedPostGroup::is_twisted() const {
  return kind_ == Kind::LeftTwisted || kind_ == Kind::RightTwisted || kind_ == Kind::TwoSidedTwisted;
}

MapTable TwistedPostGroup::left_mult(Elem a) const {
  MapTable m(order());
  for (Elem b = 0; b < order(); ++b) m[b] = tri()(a, b);
  return m;
}

void require_left_twisted(const TwistedPostGroup& t, const char* op) {
  if (t.kind() != Kind::LeftTwisted && t.kind() != Kind::TwoSidedTwisted)
    throw Error(ErrorCode::PreconditionFailed, fmt::format("{} needs a left twisted post group, got {}", op,
                                                           to_string(t.kind())));
}

namespace {

SubAdjacent sub_adjacent_raw(const FiniteGroup& g, const OpTable& tri, const MapTable& phi) {
  const std::size_t n = g.order();
  SubAdjacent s;
  s.circ = left_circ(g, tri, phi);
  s.e.assign(n, std::nullopt);
  s.dagger.assign(n, std::nullopt);
  for (Elem a = 0; a < n; ++a) {
    MapTable la(n);
    for (Elem b = 0; b < n; ++b) la[b] = tri(a, b);
    const auto inv = la.inverse();
    if (!inv) {
      s.undefined.push_back(a);
      continue;
    }
    const Elem pinv = g.inv(phi[a]);
    const Elem e = (*inv)[g.op(pinv, a)];
    s.e[a] = e;
    s.dagger[a] = (*inv)[g.op(pinv, e)];
  }
  return s;
}

Report laws_raw(const FiniteGroup& g, const OpTable& tri, const MapTable& phi) {
  const std::size_t n = g.order();
  const SubAdjacent s = sub_adjacent_raw(g, tri, phi);
  const OpTable& c = s.circ;
  Report r;

  Check& defined = r.add("local_identity_defined");
  if (!s.undefined.empty()) {
    defined = {defined.name, false, {s.undefined.front()}, "L_a is not invertible"};
    return r;
  }

  Check& assoc = r.add("circ_associative");
  for (Elem a = 0; a < n && assoc.ok; ++a)
    for (Elem b = 0; b < n && assoc.ok; ++b)
      for (Elem d = 0; d < n && assoc.ok; ++d)
        if (c(c(a, b), d) != c(a, c(b, d))) assoc = {assoc.name, false, {a, b, d}, "(a o b) o c != a o (b o c)"};

  Check& cancel = r.add("left_cancellative");
  for (Elem a = 0; a < n && cancel.ok; ++a)
    for (Elem b = 0; b < n && cancel.ok; ++b)
      for (Elem d = b + 1; d < n && cancel.ok; ++d)
        if (c(a, b) == c(a, d)) cancel = {cancel.name, false, {a, b, d}, "a o b == a o c with b != c"};

  Check& rid = r.add("right_local_identity");
  for (Elem a = 0; a < n && rid.ok; ++a)
    if (c(a, s.e_at(a)) != a) rid = {rid.name, false, {a}, "a o e_a != a"};

  Check& linv = r.add("local_inverse");
  for (Elem a = 0; a < n && linv.ok; ++a)
    if (c(a, s.dagger_at(a)) != s.e_at(a)) linv = {linv.name, false, {a}, "a o a^dagger != e_a"};

  Check& kill = r.add("phi_kills_idempotents");
  for (Elem a = 0; a < n && kill.ok; ++a)
    if (phi[s.e_at(a)] != g.identity()) kill = {kill.name, false, {a}, "Phi(e_a) != 1"};

  Check& lid = r.add("left_identity");
  for (Elem a = 0; a < n && lid.ok; ++a)
    for (Elem b = 0; b < n && lid.ok; ++b)
      if (c(s.e_at(a), b) != b) lid = {lid.name, false, {a, b}, "e_a o b != b"};

  Check& idem = r.add("idempotent");
  for (Elem a = 0; a < n && idem.ok; ++a)
    if (c(s.e_at(a), s.e_at(a)) != s.e_at(a)) idem = {idem.name, false, {a}, "e_a o e_a != e_a"};

  Check& shift = r.add("idempotent_shift");
  for (Elem a = 0; a < n && shift.ok; ++a)
    for (Elem b = 0; b < n && shift.ok; ++b)
      if (s.e_at(c(a, b)) != s.e_at(b)) shift = {shift.name, false, {a, b}, "e_{a o b} != e_b"};
  return r;
}

}  // namespace

SubAdjacent sub_adjacent(const TwistedPostGroup& t) {
  if (!t.is_left_kind())
    throw Error(ErrorCode::PreconditionFailed, "sub_adjacent needs a left (weak) twisted post group");
  return sub_adjacent_raw(t.group(), t.tri(), t.phi());
}

Report subadjacent_laws(const FiniteGroup& g, const OpTable& tri, const MapTable& phi) {
  require_sizes(g, tri, phi);
  return laws_raw(g, tri, phi);
}

Report check_subadjacent_laws(const TwistedPostGroup& t) {
  require_left_twisted(t, "check_subadjacent_laws");
  return laws_raw(t.group(), t.tri(), t.phi());
}

Component component(const TwistedPostGroup& t, Elem a) {
  require_left_twisted(t, "component");
  const SubAdjacent s = sub_adjacent(t);
  const std::size_t n = t.order();
  const Elem ea = s.e_at(a);
  std::set<Elem> set;
  for (Elem b = 0; b < n; ++b) set.insert(s.circ(b, ea));

  Component comp{ea, {set.begin(), set.end()}, {}, {}};
  const auto& m = comp.members;
  auto local = [&](Elem x) -> std::optional<Elem> {
    auto it = std::lower_bound(m.begin(), m.end(), x);
    if (it == m.end() || *it != x) return std::nullopt;
    return static_cast<Elem>(it - m.begin());
  };

  Check& closed = comp.checks.add("closed");
  OpTable table(m.size());
  for (Elem i = 0; i < m.size(); ++i)
    for (Elem j = 0; j < m.size(); ++j) {
      const auto k = local(s.circ(m[i], m[j]));
      if (!k) {
        if (closed.ok) closed = {closed.name, false, {m[i], m[j]}, "product leaves G_a"};
        continue;
      }
      table.at(i, j) = *k;
    }

  Check& grp = comp.checks.add("group_axioms");
  if (closed.ok) {
    try {
      comp.group = make_group(table);
    } catch (const Error& e) {
      grp = {grp.name, false, {}, e.what()};
    }
  } else {
    grp = {grp.name, false, {}, "not closed"};
  }

  Check& ident = comp.checks.add("identity_is_e_a");
  Check& inv = comp.checks.add("inverse_of_b_o_e_a_is_bdagger_o_e_a");
  if (grp.ok) {
    if (m[comp.group.identity()] != ea) ident = {ident.name, false, {a}, "group identity differs from e_a"};
    for (Elem b = 0; b < n && inv.ok; ++b) {
      const Elem x = s.circ(b, ea);
      const Elem y = s.circ(s.dagger_at(b), ea);
      const auto lx = local(x), ly = local(y);
      if (!lx || !ly || comp.group.inv(*lx) != *ly) inv = {inv.name, false, {b}, "inverse mismatch"};
    }
  } else {
    ident.ok = inv.ok = false;
  }
  return comp;
}

Decomposition decompose(const TwistedPostGroup& t) {
  require_left_twisted(t, "decompose");
  const SubAdjacent s = sub_adjacent(t);
  const FiniteGroup& g = t.group();
  const std::size_t n = g.order();
  const Elem e1 = s.e_at(g.identity());
  Decomposition d;

  std::set<Elem> idem;
  for (Elem a = 0; a < n; ++a) idem.insert(s.e_at(a));
  d.idempotents.assign(idem.begin(), idem.end());

  std::vector<Component> comps;
  for (Elem k : d.idempotents) comps.push_back(component(t, k));
  std::sort(comps.begin(), comps.end(), [](const Component& x, const Component& y) { return x.members < y.members; });
  for (const auto& c : comps) d.components.push_back(c.members);

  Check& groups = d.checks.add("components_are_groups");
  for (const auto& c : comps)
    if (!c.checks.ok() && groups.ok) groups = {groups.name, false, {c.idempotent}, c.checks.first_failure()->name};

  Check& disjoint = d.checks.add("components_disjoint");
  Check& cover = d.checks.add("components_cover");
  std::vector<int> hits(n, 0);
  for (const auto& c : d.components)
    for (Elem x : c) ++hits[x];
  for (Elem x = 0; x < n; ++x) {
    if (hits[x] > 1 && disjoint.ok) disjoint = {disjoint.name, false, {x}, "element in two components"};
    if (hits[x] == 0 && cover.ok) cover = {cover.name, false, {x}, "element in no component"};
  }

  const Component g1 = component(t, g.identity());
  d.sub_adjacent_group = g1.members;
  d.psi_group = MapTable(n);
  d.psi_idempotent = MapTable(n);
  for (Elem a = 0; a < n; ++a) {
    d.psi_group[a] = s.circ(a, e1);
    d.psi_idempotent[a] = s.e_at(a);
  }

  Check& into = d.checks.add("psi_well_defined");
  Check& bij = d.checks.add("psi_bijective");
  std::set<std::pair<Elem, Elem>> images;
  for (Elem a = 0; a < n; ++a) {
    const Elem x = d.psi_group[a];
    if (!std::binary_search(g1.members.begin(), g1.members.end(), x) && into.ok)
      into = {into.name, false, {a}, "a o e_1 not in G_1"};
    if (!images.insert({x, d.psi_idempotent[a]}).second && bij.ok) bij = {bij.name, false, {a}, "Psi not injective"};
  }
  if (bij.ok && images.size() != g1.members.size() * d.idempotents.size())
    bij = {bij.name, false, {}, "Psi not onto G_1 x K"};

  Check& mult = d.checks.add("psi_multiplicative");
  for (Elem a = 0; a < n && mult.ok; ++a)
    for (Elem b = 0; b < n && mult.ok; ++b) {
      const Elem ab = s.circ(a, b);
      // (a1, k1) * (a2, k2) = (a1 o a2, k2)
      if (d.psi_group[ab] != s.circ(d.psi_group[a], d.psi_group[b]) || d.psi_idempotent[ab] != d.psi_idempotent[b])
        mult = {mult.name, false, {a, b}, "Psi(a o b) != Psi(a) * Psi(b)"};
    }

  d.checks.add("order_product", g1.members.size() * d.idempotents.size() == n, {},
               fmt::format("|G_1| = {}, |K| = {}, |G| = {}", g1.members.size(), d.idempotents.size(), n));

  std::set<Elem> phi_image(t.phi().values().begin(), t.phi().values().end());
  d.checks.add("phi_image_is_G1", std::vector<Elem>(phi_image.begin(), phi_image.end()) == g1.members);

  // pi_{a,b}(x) = x o e_b : G_a -> G_b is a bijective homomorphism
  Check& pi = d.checks.add("component_isomorphisms");
  for (const auto& ca : comps) {
    for (const auto& cb : comps) {
      if (!pi.ok) break;
      std::set<Elem> img;
      for (Elem x : ca.members) {
        const Elem y = s.circ(x, cb.idempotent);
        if (!std::binary_search(cb.members.begin(), cb.members.end(), y)) {
          pi = {pi.name, false, {ca.idempotent, cb.idempotent, x}, "image leaves G_b"};
          break;
        }
        img.insert(y);
        for (Elem z : ca.members)
          if (s.circ(s.circ(x, z), cb.idempotent) != s.circ(y, s.circ(z, cb.idempotent)) && pi.ok)
            pi = {pi.name, false, {ca.idempotent, cb.idempotent, x}, "not multiplicative"};
      }
      if (pi.ok && img.size() != cb.members.size())
        pi = {pi.name, false, {ca.idempotent, cb.idempotent}, "not bijective"};
    }
  }
  return d;
}

Report cocycle_lemmas(const TwistedPostGroup& t) {
  require_left_twisted(t, "cocycle_lemmas");
  const FiniteGroup& g = t.group();
  const MapTable& phi = t.phi();
  Report r;
  const bool idempotent = phi.after(phi) == phi;
  const bool normalized = phi[g.identity()] == g.identity();
  r.add("idempotent_iff_normalized", idempotent == normalized, {},
        fmt::format("Phi^2 = Phi: {}, Phi(1) = 1: {}", idempotent, normalized));
  Check& frt = r.add("phi_absorbed_by_action");
  if (idempotent) {
    for (Elem a = 0; a < g.order() && frt.ok; ++a)
      for (Elem b = 0; b < g.order() && frt.ok; ++b)
        if (t.act(a, b) != t.act(phi[a], b)) frt = {frt.name, false, {a, b}, "a|>b != Phi(a)|>b"};
  } else {
    frt.detail = "not applicable: Phi is not idempotent";
  }
  return r;
}

Report tpg_homomorphism_check(const MapTable& f, const TwistedPostGroup& src, const TwistedPostGroup& dst) {
  if (!src.is_left_kind() || !dst.is_left_kind())
    throw Error(ErrorCode::PreconditionFailed, "homomorphism check needs left structures");
  const auto hom = is_homomorphism(f, src.group(), dst.group());
  Report r;
  r.add("group_homomorphism", hom.ok, hom.witness ? std::vector<Elem>{hom.witness->a, hom.witness->b} : std::vector<Elem>{});
  Check& tri = r.add("action_compatible");
  for (Elem a = 0; a < src.order() && tri.ok; ++a)
    for (Elem b = 0; b < src.order() && tri.ok; ++b)
      if (f[src.act(a, b)] != dst.act(f[a], f[b])) tri = {tri.name, false, {a, b}, "F(a|>b) != F(a)|>F(b)"};
  Check& phi = r.add("phi_compatible");
  for (Elem a = 0; a < src.order() && phi.ok; ++a)
    if (f[src.phi()[a]] != dst.phi()[f[a]]) phi = {phi.name, false, {a}, "F(Phi(a)) != Phi(F(a))"};
  if (r.ok()) {
    Check& circ = r.add("circ_compatible");
    for (Elem a = 0; a < src.order() && circ.ok; ++a)
      for (Elem b = 0; b < src.order() && circ.ok; ++b)
        if (f[src.circ(a, b)] != dst.circ(f[a], f[b])) circ = {circ.name, false, {a, b}, "F(a o b) != F(a) o F(b)"};
    if (!circ.ok) throw Error(ErrorCode::InternalInconsistency, "homomorphism does not preserve o");
  }
  return r;
}

}  // namespace twistpost
