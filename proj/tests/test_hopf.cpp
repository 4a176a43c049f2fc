#include "doctest.h"
#include "support.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"
#include "twistpost/hopf.hpp"

using namespace twistpost;

namespace {

std::vector<TwistedPostGroup> normalized() {
  std::vector<TwistedPostGroup> out;
  for (auto& e : builtin_corpus())
    if (e.t.is_twisted() && e.t.is_left_kind() && e.t.phi()[e.t.group().identity()] == e.t.group().identity())
      out.push_back(std::move(e.t));
  for (const char* spec : {"cyclic(3)", "klein_four", "symmetric(3)"}) {
    EnumerationTask task;
    task.group = spec;
    for (auto& t : enumerate_tpg(task).structures)
      if (t.phi()[t.group().identity()] == t.group().identity()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("sparse elements") {
    auto x = GroupAlgebraElement::term(1, 2) + GroupAlgebraElement::term(2, 3);
    CHECK(x.coeff(1) == 2);
    CHECK(x.coeff(0) == 0);
    CHECK((x - x).is_zero());
    CHECK((x - GroupAlgebraElement::term(2, 3)).as_basis() == std::nullopt);
    CHECK(GroupAlgebraElement::basis(3).as_basis() == Elem{3});
    for (const auto& [g, q] : x.add(1, -2).coeffs()) CHECK(q != 0);
  }

  TEST_CASE("linearization of normalized structures") {
    for (const auto& t : normalized()) {
      const auto h = linearize(t);
      CHECK_MESSAGE(h.checks().ok(), h.checks().failure_message());
      const auto& g = t.group();
      // bilinear extension agrees with the tables on basis elements
      for (Elem a = 0; a < t.order(); ++a)
        for (Elem b = 0; b < t.order(); ++b) {
          const auto A = GroupAlgebraElement::basis(a), B = GroupAlgebraElement::basis(b);
          CHECK(h.act(A, B).as_basis() == t.act(a, b));
          CHECK(h.circ(A, B).as_basis() == t.circ(a, b));
          CHECK(h.product(A, B).as_basis() == g.op(a, b));
        }
      // on a two-term element the action is linear
      const auto x = GroupAlgebraElement::term(0, 2) + GroupAlgebraElement::term(t.order() - 1, -1);
      const auto y = GroupAlgebraElement::basis(t.order() > 1 ? 1 : 0);
      CHECK(h.act(x, y) == h.act(GroupAlgebraElement::basis(0), y).scaled(2) -
                               h.act(GroupAlgebraElement::basis(t.order() - 1), y));
    }
  }

  TEST_CASE("unnormalized cocycle is rejected") {
    try {
      linearize(z2_shifted());
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CocycleNotNormalized);
    }
    CHECK_THROWS_AS(linearize(z3_field()), Error);
  }

  TEST_CASE("hopf truss roundtrip") {
    for (const auto& t : normalized()) CHECK(hopf_truss_roundtrip(linearize(t)).ok());
  }

  TEST_CASE("sub-adjacent hopf algebra") {
    const auto s3 = symmetric_group(3);
    const auto triv = sub_adjacent_hopf(linearize(trivial_post_group(s3)));
    CHECK(triv.antipode == s3.inverses());
    CHECK_FALSE(triv.commutative);

    const auto k = sub_adjacent_hopf(linearize(klein_projection()));
    CHECK(k.basis == std::vector<Elem>{0, 2});
    for (Elem g : k.basis) CHECK(k.antipode[g] == g);
    CHECK(k.commutative);

    const auto z4 = z4_brace();
    const auto s = sub_adjacent_hopf(linearize(z4));
    const auto circ = sub_adjacent(z4).circ;
    for (Elem g = 0; g < 4; ++g) {
      CHECK(circ(g, s.antipode[g]) == 0);
      CHECK(circ(s.antipode[g], g) == 0);
    }
    for (const auto& t : normalized()) {
      const auto sh = sub_adjacent_hopf(linearize(t));
      CHECK_MESSAGE(sh.checks.ok(), sh.checks.failure_message());
      const auto sa = sub_adjacent(t);
      for (Elem g : sh.basis) CHECK(sh.antipode[g] == sa.dagger_at(g));
    }
  }

  TEST_CASE("group-likes recover the base") {
    for (const auto& t : normalized()) {
      const auto gl = group_likes(linearize(t));
      CHECK(gl.checks.ok());
      CHECK(gl.elements.size() == t.order());
      REQUIRE(gl.rebuilt.has_value());
      CHECK(gl.rebuilt->tri() == t.tri());
      CHECK(gl.rebuilt->phi() == t.phi());
    }
  }

  TEST_CASE("coproduct and counit") {
    const auto h = linearize(klein_projection());
    const auto x = GroupAlgebraElement::term(1, 3) + GroupAlgebraElement::term(2, -1);
    const auto d = h.coproduct(x);
    CHECK(d.size() == 2);
    CHECK(d.at({1, 1}) == 3);
    CHECK(h.counit(x) == 2);
  }
}
