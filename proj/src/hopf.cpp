#include "twistpost/hopf.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

GroupAlgebraElement GroupAlgebraElement::term(Elem g, const Rational& q) {
  GroupAlgebraElement x;
  x.add(g, q);
  return x;
}

Rational GroupAlgebraElement::coeff(Elem g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<Elem> GroupAlgebraElement::as_basis() const {
  if (coeffs_.size() != 1 || coeffs_.begin()->second != 1) return std::nullopt;
  return coeffs_.begin()->first;
}

GroupAlgebraElement& GroupAlgebraElement::add(Elem g, const Rational& q) {
  if (q == 0) return *this;
  auto [it, inserted] = coeffs_.try_emplace(g, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) coeffs_.erase(it);
  }
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, q] : o.coeffs_) out.add(g, q);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, q] : o.coeffs_) out.add(g, -q);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& s) const {
  GroupAlgebraElement out;
  for (const auto& [g, q] : coeffs_) out.add(g, q * s);
  return out;
}

namespace {

template <typename F>
GroupAlgebraElement bilinear(const GroupAlgebraElement& x, const GroupAlgebraElement& y, F on_basis) {
  GroupAlgebraElement out;
  for (const auto& [g, p] : x.coeffs())
    for (const auto& [h, q] : y.coeffs()) out.add(on_basis(g, h), p * q);
  return out;
}

template <typename F>
GroupAlgebraElement linear(const GroupAlgebraElement& x, F on_basis) {
  GroupAlgebraElement out;
  for (const auto& [g, p] : x.coeffs()) out.add(on_basis(g), p);
  return out;
}

using GA = GroupAlgebraElement;

}  // namespace

GA GroupAlgebraTPHA::product(const GA& x, const GA& y) const {
  return bilinear(x, y, [&](Elem g, Elem h) { return base_.group().op(g, h); });
}

GA GroupAlgebraTPHA::act(const GA& x, const GA& y) const {
  return bilinear(x, y, [&](Elem g, Elem h) { return base_.act(g, h); });
}

GA GroupAlgebraTPHA::circ(const GA& x, const GA& y) const {
  // group-like x_1 = x_2 = g on each basis term
  GA out;
  for (const auto& [g, p] : x.coeffs()) out = out + product(GA::basis(base_.phi()[g]), act(GA::basis(g), y)).scaled(p);
  return out;
}

GA GroupAlgebraTPHA::phi(const GA& x) const {
  return linear(x, [&](Elem g) { return base_.phi()[g]; });
}

GA GroupAlgebraTPHA::antipode(const GA& x) const {
  return linear(x, [&](Elem g) { return base_.group().inv(g); });
}

GA GroupAlgebraTPHA::inverse_act(Elem g, const GA& y) const {
  return linear(y, [&](Elem h) { return inverse_[g][h]; });
}

TensorElement GroupAlgebraTPHA::coproduct(const GA& x) const {
  TensorElement out;
  for (const auto& [g, p] : x.coeffs()) out[{g, g}] += p;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational GroupAlgebraTPHA::counit(const GA& x) const {
  Rational s = 0;
  for (const auto& [g, p] : x.coeffs()) s += p;
  return s;
}

namespace {

TensorElement tensor(const GA& x, const GA& y) {
  TensorElement out;
  for (const auto& [g, p] : x.coeffs())
    for (const auto& [h, q] : y.coeffs()) out[{g, h}] += p * q;
  return out;
}

}  // namespace

GroupAlgebraTPHA linearize(const TwistedPostGroup& t) {
  require_left_twisted(t, "linearize");
  const FiniteGroup& g = t.group();
  if (t.phi()[g.identity()] != g.identity())
    throw Error(ErrorCode::CocycleNotNormalized, fmt::format("Phi(1) = {} is not the identity {}", t.phi()[g.identity()], g.identity()));
  const std::size_t n = g.order();
  GroupAlgebraTPHA h(t);
  for (Elem a = 0; a < n; ++a) h.inverse_.push_back(*t.left_mult(a).inverse());

  const GA one = GA::basis(g.identity());
  auto B = [](Elem x) { return GA::basis(x); };
  Report& r = h.checks_;

  Check& tpha1 = r.add("TPHA1");
  for (Elem x = 0; x < n && tpha1.ok; ++x)
    for (Elem y = 0; y < n && tpha1.ok; ++y)
      for (Elem z = 0; z < n && tpha1.ok; ++z)
        if (h.act(B(x), h.product(B(y), B(z))) != h.product(h.act(B(x), B(y)), h.act(B(x), B(z))))
          tpha1 = {tpha1.name, false, {x, y, z}, "x|>(yz) != (x1|>y)(x2|>z)"};

  Check& tpha2 = r.add("TPHA2");
  for (Elem x = 0; x < n && tpha2.ok; ++x)
    for (Elem y = 0; y < n && tpha2.ok; ++y)
      for (Elem z = 0; z < n && tpha2.ok; ++z)
        if (h.act(h.circ(B(x), B(y)), B(z)) != h.act(B(x), h.act(B(y), B(z))))
          tpha2 = {tpha2.name, false, {x, y, z}, "(x o y)|>z != x|>(y|>z)"};

  Check& tpha3 = r.add("TPHA3");
  for (Elem x = 0; x < n && tpha3.ok; ++x)
    for (Elem y = 0; y < n && tpha3.ok; ++y)
      if (h.phi(h.circ(B(x), B(y))) != h.circ(B(x), h.phi(B(y))))
        tpha3 = {tpha3.name, false, {x, y}, "Phi(x o y) != x o Phi(y)"};

  Check& inv = r.add("T_inverse");
  for (Elem x = 0; x < n && inv.ok; ++x)
    for (Elem y = 0; y < n && inv.ok; ++y)
      if (h.act(B(x), h.inverse_act(x, B(y))) != B(y) || h.inverse_act(x, h.act(B(x), B(y))) != B(y))
        inv = {inv.name, false, {x, y}, "L_x T_x != id"};

  Check& co = r.add("coproduct_multiplicative");
  Check& eps = r.add("counit_multiplicative");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const GA c = h.circ(B(x), B(y));
      if (co.ok && h.coproduct(c) != tensor(c, c)) co = {co.name, false, {x, y}, "Delta(x o y) != (x o y) (x) (x o y)"};
      if (eps.ok && h.counit(c) != h.counit(B(x)) * h.counit(B(y))) eps = {eps.name, false, {x, y}, "eps(x o y) != 1"};
    }

  Check& unit_action = r.add("unit_action");
  Check& on_unit = r.add("action_on_unit");
  Check& with_s = r.add("action_commutes_with_S");
  for (Elem x = 0; x < n; ++x) {
    if (unit_action.ok && h.act(one, B(x)) != B(x)) unit_action = {unit_action.name, false, {x}, "1|>x != x"};
    if (on_unit.ok && h.act(B(x), one) != one) on_unit = {on_unit.name, false, {x}, "x|>1 != 1"};
    for (Elem y = 0; y < n && with_s.ok; ++y)
      if (h.antipode(h.act(B(x), B(y))) != h.act(B(x), h.antipode(B(y))))
        with_s = {with_s.name, false, {x, y}, "S(x|>y) != x|>S(y)"};
  }

  Check& idem = r.add("phi_idempotent");
  Check& absorbed = r.add("phi_absorbed_by_action");
  for (Elem x = 0; x < n; ++x) {
    if (idem.ok && h.phi(h.phi(B(x))) != h.phi(B(x))) idem = {idem.name, false, {x}, "Phi(Phi(x)) != Phi(x)"};
    for (Elem y = 0; y < n && absorbed.ok; ++y)
      if (h.act(h.phi(B(x)), B(y)) != h.act(B(x), B(y)))
        absorbed = {absorbed.name, false, {x, y}, "Phi(x)|>y != x|>y"};
  }
  return h;
}

Report hopf_truss_roundtrip(const GroupAlgebraTPHA& h) {
  const std::size_t n = h.dim();
  auto B = [](Elem x) { return GA::basis(x); };
  Report r;
  Check& hts = r.add("hopf_truss_cocycle");
  for (Elem x = 0; x < n && hts.ok; ++x) {
    const GA s = h.antipode(h.phi(B(x)));
    for (Elem y = 0; y < n && hts.ok; ++y)
      for (Elem z = 0; z < n && hts.ok; ++z)
        if (h.circ(B(x), h.product(B(y), B(z))) != h.product(h.product(h.circ(B(x), B(y)), s), h.circ(B(x), B(z))))
          hts = {hts.name, false, {x, y, z}, "x o (yz) != (x o y) S(Phi(x)) (x o z)"};
  }
  Check& back = r.add("action_recovered");
  for (Elem x = 0; x < n && back.ok; ++x)
    for (Elem y = 0; y < n && back.ok; ++y) {
      const GA recovered = h.product(h.antipode(h.phi(B(x))), h.circ(B(x), B(y)));
      if (recovered != h.act(B(x), B(y))) back = {back.name, false, {x, y}, "S(Phi(x))(x o y) != x|>y"};
    }
  return r;
}

SubAdjacentHopf sub_adjacent_hopf(const GroupAlgebraTPHA& h) {
  const TwistedPostGroup& t = h.base();
  const FiniteGroup& g = t.group();
  const std::size_t n = h.dim();
  auto B = [](Elem x) { return GA::basis(x); };
  const GA one = B(g.identity());
  SubAdjacentHopf out;
  std::set<Elem> image(t.phi().values().begin(), t.phi().values().end());
  out.basis.assign(image.begin(), image.end());
  out.antipode = MapTable::identity(n);

  for (Elem x : out.basis) {
    // S_|>(Phi(x)) = T_{Phi(x)}(S(Phi(x))); Phi(x) = x on the image
    const auto s = h.inverse_act(t.phi()[x], h.antipode(h.phi(B(x)))).as_basis();
    if (!s) throw Error(ErrorCode::InternalInconsistency, "antipode of a group-like is not group-like");
    out.antipode[x] = *s;
  }

  Check& closed = out.checks.add("circ_closed");
  Check& unit = out.checks.add("unit");
  for (Elem x : out.basis) {
    if (unit.ok && (h.circ(one, B(x)) != B(x) || h.circ(B(x), one) != B(x))) unit = {unit.name, false, {x}, "1 o x != x or x o 1 != x"};
    for (Elem y : out.basis) {
      const auto c = h.circ(B(x), B(y)).as_basis();
      if (closed.ok && (!c || !image.count(*c))) closed = {closed.name, false, {x, y}, "x o y leaves Phi(G)"};
    }
  }

  Check& left = out.checks.add("antipode_left");
  Check& right = out.checks.add("antipode_right");
  Check& dagger = out.checks.add("antipode_is_dagger");
  Check& invol = out.checks.add("antipode_involutive");
  const SubAdjacent sa = sub_adjacent(t);
  for (Elem x : out.basis) {
    const Elem s = out.antipode[x];
    const GA eps_one = one.scaled(h.counit(B(x)));
    if (left.ok && h.circ(B(x), B(s)) != eps_one) left = {left.name, false, {x}, "x o S(x) != eps(x) 1"};
    if (right.ok && h.circ(B(s), B(x)) != eps_one) right = {right.name, false, {x}, "S(x) o x != eps(x) 1"};
    if (dagger.ok && s != sa.dagger_at(x)) dagger = {dagger.name, false, {x}, "S(x) != x^dagger"};
    if (invol.ok && (!image.count(s) || out.antipode[s] != x)) invol = {invol.name, false, {x}, "S(S(x)) != x"};
  }

  Check& cocomm = out.checks.add("cocommutative");
  for (Elem x : out.basis) {
    const TensorElement d = h.coproduct(B(x));
    for (const auto& [k, q] : d) {
      auto it = d.find({k.second, k.first});
      if (cocomm.ok && (it == d.end() || it->second != q)) cocomm = {cocomm.name, false, {x}, "Delta(x) not symmetric"};
    }
  }

  out.commutative = true;
  for (Elem x : out.basis)
    for (Elem y : out.basis) out.commutative = out.commutative && h.circ(B(x), B(y)) == h.circ(B(y), B(x));
  return out;
}

GroupLikes group_likes(const GroupAlgebraTPHA& h) {
  const std::size_t n = h.dim();
  auto B = [](Elem x) { return GA::basis(x); };
  GroupLikes out;
  auto is_group_like = [&](const GA& x) { return h.counit(x) == 1 && h.coproduct(x) == tensor(x, x); };

  for (Elem x = 0; x < n; ++x)
    if (is_group_like(B(x))) out.elements.push_back(x);
  out.checks.add("all_basis_group_like", out.elements.size() == n, {},
                 fmt::format("{} of {} basis elements", out.elements.size(), n));

  Check& mixed = out.checks.add("no_mixed_group_likes");
  const Rational half(1, 2);
  for (Elem x = 0; x < n && mixed.ok; ++x)
    for (Elem y = x + 1; y < n && mixed.ok; ++y)
      if (is_group_like((B(x) + B(y)).scaled(half))) mixed = {mixed.name, false, {x, y}, "(x+y)/2 is group-like"};

  Check& closed = out.checks.add("closed");
  OpTable tri(n);
  MapTable phi(n);
  for (Elem x = 0; x < n && closed.ok; ++x) {
    const auto p = h.phi(B(x)).as_basis();
    if (!p) closed = {closed.name, false, {x}, "Phi(x) is not group-like"};
    else phi[x] = *p;
    for (Elem y = 0; y < n && closed.ok; ++y) {
      const auto a = h.act(B(x), B(y)).as_basis();
      if (!a) closed = {closed.name, false, {x, y}, "x|>y is not group-like"};
      else tri.at(x, y) = *a;
    }
  }
  Check& matches = out.checks.add("matches_base");
  if (closed.ok) {
    out.rebuilt = TwistedPostGroup::left(h.base().group(), std::move(tri), std::move(phi));
    if (out.rebuilt->tri() != h.base().tri() || out.rebuilt->phi() != h.base().phi() ||
        out.rebuilt->kind() != Kind::LeftTwisted)
      matches = {matches.name, false, {}, "rebuilt structure differs from the base"};
  } else {
    matches.ok = false;
  }
  return out;
}

}  // namespace twistpost
