#include "twistpost/brace.hpp"

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

const char* to_string(BraceSide s) {
  switch (s) {
    case BraceSide::Left: return "left";
    case BraceSide::Right: return "right";
    case BraceSide::TwoSided: return "two_sided";
  }
  return "?";
}

std::optional<BraceSide> brace_side_from_string(const std::string& s) {
  for (BraceSide b : {BraceSide::Left, BraceSide::Right, BraceSide::TwoSided})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

Report verify_brace(const FiniteGroup& g, const OpTable& circ, BraceSide side) {
  const std::size_t n = g.order();
  if (circ.order() != n) throw Error(ErrorCode::DimensionMismatch, "circ table size differs from group");
  Report r;
  Check& grp = r.add("circ_group");
  try {
    make_group(circ);
  } catch (const Error& e) {
    grp = {grp.name, false, {}, e.what()};
  }
  if (side != BraceSide::Right) {
    Check& left = r.add("left_brace_law");
    for (Elem a = 0; a < n && left.ok; ++a)
      for (Elem b = 0; b < n && left.ok; ++b)
        for (Elem c = 0; c < n && left.ok; ++c)
          if (circ(a, g.op(b, c)) != g.op(g.op(circ(a, b), g.inv(a)), circ(a, c)))
            left = {left.name, false, {a, b, c}, "a o (bc) != (a o b) a^-1 (a o c)"};
  }
  if (side != BraceSide::Left) {
    Check& right = r.add("right_brace_law");
    for (Elem a = 0; a < n && right.ok; ++a)
      for (Elem b = 0; b < n && right.ok; ++b)
        for (Elem c = 0; c < n && right.ok; ++c)
          if (circ(g.op(a, b), c) != g.op(g.op(circ(a, c), g.inv(c)), circ(b, c)))
            right = {right.name, false, {a, b, c}, "(ab) o c != (a o c) c^-1 (b o c)"};
  }
  return r;
}

SkewBrace make_brace(FiniteGroup g, OpTable circ, BraceSide side) {
  const Report r = verify_brace(g, circ, side);
  if (!r.ok()) throw Error(ErrorCode::AxiomViolation, r.failure_message());
  return {std::move(g), std::move(circ), side};
}

TwistedPostGroup brace_to_tpg(const SkewBrace& b) {
  const FiniteGroup& g = b.group;
  const std::size_t n = g.order();
  OpTable tri(n), tri_right(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      tri.at(x, y) = g.op(g.inv(x), b.circ(x, y));
      tri_right.at(x, y) = g.op(b.circ(x, y), g.inv(y));
    }
  const MapTable id = MapTable::identity(n);
  switch (b.side) {
    case BraceSide::Left: return TwistedPostGroup::left(g, std::move(tri), id);
    case BraceSide::Right: return TwistedPostGroup::right(g, std::move(tri_right), id);
    case BraceSide::TwoSided: break;
  }
  return TwistedPostGroup::two_sided(g, std::move(tri), std::move(tri_right), id);
}

namespace {

Elem one_dagger(const TwistedPostGroup& t) { return sub_adjacent(t).dagger_at(t.group().identity()); }

}  // namespace

TwistedPostGroup idempotent_transform(const TwistedPostGroup& t) {
  require_left_twisted(t, "idempotent_transform");
  const std::size_t n = t.order();
  const Elem d = one_dagger(t);
  OpTable tri(n);
  MapTable psi(n);
  for (Elem a = 0; a < n; ++a) {
    const Elem u = t.circ(a, d);
    psi[a] = t.phi()[u];
    for (Elem b = 0; b < n; ++b) tri.at(a, b) = t.act(u, b);
  }
  if (psi.after(psi) != psi) throw Error(ErrorCode::InternalInconsistency, "transformed cocycle is not idempotent");
  try {
    TwistedPostGroup out = TwistedPostGroup::left(t.group(), std::move(tri), std::move(psi));
    if (out.kind() != Kind::LeftTwisted) throw Error(ErrorCode::InternalInconsistency, "transform is weak");
    return out;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) throw;
    throw Error(ErrorCode::InternalInconsistency, e.what());
  }
}

namespace {

OpTable bullet_table(const TwistedPostGroup& t) {
  if (t.phi().image_size() != t.order())
    throw Error(ErrorCode::CocycleNotSurjective,
                fmt::format("Phi has image of size {} in a group of order {}", t.phi().image_size(), t.order()));
  const TwistedPostGroup idem = idempotent_transform(t);
  const Elem d = one_dagger(t);
  const std::size_t n = t.order();
  OpTable bullet(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      bullet.at(a, b) = t.circ(t.circ(a, d), b);
      if (bullet(a, b) != idem.circ(a, b))
        throw Error(ErrorCode::InternalInconsistency, fmt::format("bullet product disagrees at ({},{})", a, b));
    }
  return bullet;
}

}  // namespace

SkewBrace to_skew_brace(const TwistedPostGroup& t) {
  require_left_twisted(t, "to_skew_brace");
  OpTable bullet = bullet_table(t);
  const Report r = verify_brace(t.group(), bullet, BraceSide::Left);
  if (!r.ok()) throw Error(ErrorCode::InternalInconsistency, "bullet product: " + r.failure_message());
  return {t.group(), std::move(bullet), BraceSide::Left};
}

SkewBrace two_sided_brace(const TwistedPostGroup& t) {
  if (t.kind() != Kind::TwoSidedTwisted)
    throw Error(ErrorCode::PreconditionFailed, fmt::format("two_sided_brace needs TwoSidedTwisted, got {}", to_string(t.kind())));
  const SubAdjacent s = sub_adjacent(t);
  try {
    const FiniteGroup circ_group = make_group(s.circ);
    if (circ_group.identity() != s.e_at(t.group().identity()))
      throw Error(ErrorCode::InternalInconsistency, "identity of (G, o) is not e_1");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) throw;
    throw Error(ErrorCode::InternalInconsistency, fmt::format("(G, o) is not a group: {}", e.what()));
  }
  OpTable bullet = bullet_table(t);
  const Report r = verify_brace(t.group(), bullet, BraceSide::TwoSided);
  if (!r.ok()) throw Error(ErrorCode::InternalInconsistency, "bullet product: " + r.failure_message());
  return {t.group(), std::move(bullet), BraceSide::TwoSided};
}

Report verify_radical_ring(const OpTable& add, const OpTable& star) {
  const std::size_t n = add.order();
  if (star.order() != n) throw Error(ErrorCode::DimensionMismatch, "star table size differs from add");
  Report r;
  Check& grp = r.add("additive_abelian_group");
  FiniteGroup g;
  try {
    g = make_group(add);
    if (!g.is_abelian()) grp = {grp.name, false, {}, "addition is not commutative"};
  } catch (const Error& e) {
    grp = {grp.name, false, {}, e.what()};
  }
  if (!grp.ok) return r;

  Check& assoc = r.add("star_associative");
  for (Elem a = 0; a < n && assoc.ok; ++a)
    for (Elem b = 0; b < n && assoc.ok; ++b)
      for (Elem c = 0; c < n && assoc.ok; ++c)
        if (star(star(a, b), c) != star(a, star(b, c))) assoc = {assoc.name, false, {a, b, c}, "(a*b)*c != a*(b*c)"};

  Check& left = r.add("left_distributive");
  for (Elem a = 0; a < n && left.ok; ++a)
    for (Elem b = 0; b < n && left.ok; ++b)
      for (Elem c = 0; c < n && left.ok; ++c)
        if (star(a, add(b, c)) != add(star(a, b), star(a, c))) left = {left.name, false, {a, b, c}, "a*(b+c) != a*b+a*c"};

  Check& right = r.add("right_distributive");
  for (Elem a = 0; a < n && right.ok; ++a)
    for (Elem b = 0; b < n && right.ok; ++b)
      for (Elem c = 0; c < n && right.ok; ++c)
        if (star(add(a, b), c) != add(star(a, c), star(b, c)))
          right = {right.name, false, {a, b, c}, "(a+b)*c != a*c+b*c"};

  Check& rad = r.add("radical");
  for (Elem a = 0; a < n && rad.ok; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = add(add(a, b), star(a, b)) == g.identity();
    if (!found) rad = {rad.name, false, {a}, "no b with a+b+a*b = 0"};
  }
  return r;
}

RadicalRing make_radical_ring(const OpTable& add, const OpTable& star) {
  const Report r = verify_radical_ring(add, star);
  if (!r.ok()) throw Error(ErrorCode::AxiomViolation, r.failure_message());
  RadicalRing ring{make_group(add), star, MapTable(add.order())};
  for (Elem a = 0; a < add.order(); ++a)
    for (Elem b = 0; b < add.order(); ++b)
      if (add(add(a, b), star(a, b)) == ring.add.identity()) {
        ring.radical_witness[a] = b;
        break;
      }
  return ring;
}

RadicalRing to_radical_ring(const TwistedPostGroup& t) {
  if (t.kind() != Kind::TwoSidedTwisted || !t.group().is_abelian())
    throw Error(ErrorCode::PreconditionFailed, "to_radical_ring needs an abelian TwoSidedTwisted structure");
  const SkewBrace b = two_sided_brace(t);
  const FiniteGroup& g = t.group();
  const std::size_t n = g.order();
  OpTable star(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) star.at(x, y) = g.op(g.op(b.circ(x, y), g.inv(x)), g.inv(y));
  try {
    return make_radical_ring(g.mul(), star);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalInconsistency, e.what());
  }
}

Report trivial_cocycle_check(const TwistedPostGroup& t) {
  if (!t.is_two_sided() || !t.group().is_abelian())
    throw Error(ErrorCode::PreconditionFailed, "trivial_cocycle_check needs an abelian two-sided structure");
  const FiniteGroup& g = t.group();
  const std::size_t n = g.order();
  bool trivial = true;
  for (Elem a = 0; a < n; ++a) trivial = trivial && t.phi()[a] == g.identity();

  const OpTable circ = left_circ(g, t.tri(), t.phi());
  bool ring = true;
  for (Elem a = 0; a < n && ring; ++a)
    for (Elem b = 0; b < n && ring; ++b)
      for (Elem c = 0; c < n && ring; ++c)
        ring = circ(circ(a, b), c) == circ(a, circ(b, c)) && circ(a, g.op(b, c)) == g.op(circ(a, b), circ(a, c)) &&
               circ(g.op(a, b), c) == g.op(circ(a, c), circ(b, c));

  Report r;
  r.add("nonunital_ring_iff_trivial_cocycle", ring == trivial, {},
        fmt::format("(G,+,o) nonunital ring: {}, Phi = 0: {}", ring, trivial));
  if (t.is_twisted())
    r.add("trivial_cocycle_iff_zero_ring", trivial == (n == 1), {}, fmt::format("Phi = 0: {}, |G| = {}", trivial, n));
  return r;
}

Report verify_ybe(const YBESolution& s) {
  const std::size_t n = s.n;
  if (s.r.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "r must have n^2 entries");
  for (const auto& [x, y] : s.r)
    if (x >= n || y >= n) throw Error(ErrorCode::InvalidTable, "r entry out of range");
  Report rep;

  Check& bij = rep.add("bijective");
  std::vector<int> hit(n * n, -1);
  for (Elem a = 0; a < n && bij.ok; ++a)
    for (Elem b = 0; b < n && bij.ok; ++b) {
      const auto [x, y] = s(a, b);
      int& slot = hit[x * n + y];
      if (slot >= 0) bij = {bij.name, false, {static_cast<Elem>(slot / n), static_cast<Elem>(slot % n), a, b}, "r(a,b) == r(c,d)"};
      slot = static_cast<int>(a * n + b);
    }

  Check& braid = rep.add("braid_relation");
  for (Elem a = 0; a < n && braid.ok; ++a)
    for (Elem b = 0; b < n && braid.ok; ++b)
      for (Elem c = 0; c < n && braid.ok; ++c) {
        // r12 r23 r12
        auto [x1, y1] = s(a, b);
        auto [y2, z2] = s(y1, c);
        auto [x3, y3] = s(x1, y2);
        // r23 r12 r23
        auto [q1, r1] = s(b, c);
        auto [p2, q2] = s(a, q1);
        auto [q3, r3] = s(q2, r1);
        if (x3 != p2 || y3 != q3 || z2 != r3)
          braid = {braid.name, false, {a, b, c}, "(r x id)(id x r)(r x id) != (id x r)(r x id)(id x r)"};
      }

  Check& left = rep.add("left_nondegenerate");
  for (Elem a = 0; a < n && left.ok; ++a) {
    std::vector<bool> seen(n, false);
    for (Elem b = 0; b < n; ++b) {
      const Elem x = s(a, b).first;
      if (seen[x]) {
        left = {left.name, false, {a}, "b -> r(a,b)_1 is not injective"};
        break;
      }
      seen[x] = true;
    }
  }

  Check& right = rep.add("right_nondegenerate");
  for (Elem b = 0; b < n && right.ok; ++b) {
    std::vector<bool> seen(n, false);
    for (Elem a = 0; a < n; ++a) {
      const Elem y = s(a, b).second;
      if (seen[y]) {
        right = {right.name, false, {b}, "a -> r(a,b)_2 is not injective"};
        break;
      }
      seen[y] = true;
    }
  }
  return rep;
}

YBESolution yang_baxter_map(const TwistedPostGroup& t) {
  require_left_twisted(t, "yang_baxter_map");
  const SkewBrace brace = to_skew_brace(t);
  const TwistedPostGroup idem = idempotent_transform(t);
  const FiniteGroup& g = t.group();
  const std::size_t n = g.order();

  std::vector<MapTable> lam_inv(n);
  for (Elem a = 0; a < n; ++a) lam_inv[a] = *idem.left_mult(a).inverse();

  YBESolution s{n, std::vector<std::pair<Elem, Elem>>(n * n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem x = idem.act(a, b);
      const Elem ab = brace.circ(a, b);
      s.r[a * n + b] = {x, lam_inv[x][g.conjugate(ab, a)]};
    }
  const Report rep = verify_ybe(s);
  if (!rep.ok()) throw Error(ErrorCode::InternalInconsistency, "Yang-Baxter map: " + rep.failure_message());
  return s;
}

}  // namespace twistpost
