#include "twistpost/corpus.hpp"

namespace twistpost {

TwistedPostGroup trivial_post_group(const FiniteGroup& g, bool two_sided) {
  const std::size_t n = g.order();
  OpTable tri(n), tri_right(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      tri.at(a, b) = b;
      tri_right.at(a, b) = a;
    }
  if (two_sided) return TwistedPostGroup::two_sided(g, std::move(tri), std::move(tri_right), MapTable::identity(n));
  return TwistedPostGroup::left(g, std::move(tri), MapTable::identity(n));
}

TwistedPostGroup klein_projection() {
  OpTable tri(4);
  MapTable phi(4);
  for (Elem a = 0; a < 4; ++a) {
    phi[a] = a & 2u;
    for (Elem b = 0; b < 4; ++b) tri.at(a, b) = b;
  }
  return TwistedPostGroup::left(builtin_group("klein_four"), std::move(tri), std::move(phi));
}

TwistedPostGroup z2_shifted() {
  OpTable tri(2);
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) tri.at(a, b) = b;
  return TwistedPostGroup::left(cyclic_group(2), std::move(tri), MapTable(std::vector<Elem>{1, 0}));
}

TwistedPostGroup z4_brace() {
  OpTable tri(4), tri_right(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      tri.at(a, b) = (b + 2 * a * b) % 4;
      tri_right.at(a, b) = (a + 2 * a * b) % 4;
    }
  return TwistedPostGroup::two_sided(cyclic_group(4), std::move(tri), std::move(tri_right), MapTable::identity(4));
}

TwistedPostGroup z3_field() {
  OpTable tri(3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) tri.at(a, b) = (a * b) % 3;
  return TwistedPostGroup::two_sided(cyclic_group(3), tri, tri, MapTable(3, 0));
}

TwistedPostGroup klein_cyclic() {
  auto shear = [](Elem b) { return static_cast<Elem>((b & 2u) | (((b >> 1) ^ b) & 1u)); };
  OpTable tri(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) tri.at(a, b) = (a & 2u) ? shear(b) : b;
  return TwistedPostGroup::left(builtin_group("klein_four"), std::move(tri), MapTable::identity(4));
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"trivial_z" + std::to_string(n), trivial_post_group(cyclic_group(n))});
  out.push_back({"trivial_s3", trivial_post_group(symmetric_group(3))});
  out.push_back({"klein_projection", klein_projection()});
  out.push_back({"z2_shifted", z2_shifted()});
  out.push_back({"z4_brace", z4_brace()});
  out.push_back({"z3_field", z3_field()});
  out.push_back({"klein_cyclic", klein_cyclic()});
  return out;
}

std::optional<TwistedPostGroup> corpus_instance(const std::string& name) {
  for (auto& e : builtin_corpus())
    if (e.name == name) return std::move(e.t);
  return std::nullopt;
}

}  // namespace twistpost
