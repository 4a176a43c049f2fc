#include "twistpost/lie.hpp"

#include <random>
#include <set>

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

bool StructureTensor::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

Vec StructureTensor::apply(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * (*this)(i, j, k);
    }
  }
  return out;
}

Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec image(const Matrix& m, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < x.size(); ++k) out[k] += x[i] * m[i][k];
  }
  return out;
}

Matrix identity_matrix(std::size_t dim) {
  Matrix m = zero_matrix(dim);
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

Matrix zero_matrix(std::size_t dim) { return Matrix(dim, Vec(dim)); }

namespace {

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec scaled(Vec a, const Rational& s) {
  for (auto& q : a) q *= s;
  return a;
}

std::string show(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string sides(const Vec& l, const Vec& r) { return "lhs " + show(l) + " rhs " + show(r); }

void require_shapes(const TwistedPostLieAlgebra& L) {
  const std::size_t d = L.dim;
  bool ok = L.bracket.dim() == d && L.tri.dim() == d && L.phi.size() == d;
  for (const auto& row : L.phi) ok = ok && row.size() == d;
  if (!ok) throw Error(ErrorCode::DimensionMismatch, fmt::format("tensors and phi must all have dimension {}", d));
}

struct Ops {
  const TwistedPostLieAlgebra& L;
  Vec br(const Vec& x, const Vec& y) const { return L.bracket.apply(x, y); }
  Vec tr(const Vec& x, const Vec& y) const { return L.tri.apply(x, y); }
  Vec phi(const Vec& x) const { return image(L.phi, x); }
  Vec sub(const Vec& x, const Vec& y) const { return br(phi(x), phi(y)) + tr(x, phi(y)) - tr(y, phi(x)); }
  Vec e(std::size_t i) const { return basis_vector(L.dim, i); }
};

void check_antisymmetry(Report& r, const std::string& name, const StructureTensor& t) {
  const std::size_t d = t.dim();
  Check& c = r.add(name);
  for (Elem i = 0; i < d && c.ok; ++i)
    for (Elem j = i; j < d && c.ok; ++j)
      for (std::size_t k = 0; k < d && c.ok; ++k)
        if (t(i, j, k) != -t(j, i, k)) c = {c.name, false, {i, j}, "[e_i,e_j] != -[e_j,e_i]"};
}

void check_jacobi(Report& r, const std::string& name, const StructureTensor& t) {
  const std::size_t d = t.dim();
  Check& c = r.add(name);
  for (Elem i = 0; i < d && c.ok; ++i)
    for (Elem j = 0; j < d && c.ok; ++j)
      for (Elem k = 0; k < d && c.ok; ++k) {
        const Vec x = basis_vector(d, i), y = basis_vector(d, j), z = basis_vector(d, k);
        const Vec s = t.apply(x, t.apply(y, z)) + t.apply(y, t.apply(z, x)) + t.apply(z, t.apply(x, y));
        if (s != Vec(d)) c = {c.name, false, {i, j, k}, "cyclic sum " + show(s)};
      }
}

void check_tpl1(Report& r, const Ops& o) {
  const std::size_t d = o.L.dim;
  Check& c = r.add("TPL1");
  for (Elem i = 0; i < d && c.ok; ++i)
    for (Elem j = 0; j < d && c.ok; ++j)
      for (Elem k = 0; k < d && c.ok; ++k) {
        const Vec x = o.e(i), y = o.e(j), z = o.e(k);
        const Vec lhs = o.tr(x, o.br(y, z));
        const Vec rhs = o.br(o.tr(x, y), z) + o.br(y, o.tr(x, z));
        if (lhs != rhs) c = {c.name, false, {i, j, k}, sides(lhs, rhs)};
      }
}

}  // namespace

Report verify_tpla(const TwistedPostLieAlgebra& L) {
  require_shapes(L);
  const Ops o{L};
  const std::size_t d = L.dim;
  Report r;
  check_antisymmetry(r, "bracket_antisymmetric", L.bracket);
  check_jacobi(r, "bracket_jacobi", L.bracket);
  check_tpl1(r, o);

  Check& tpl2 = r.add("TPL2");
  for (Elem i = 0; i < d && tpl2.ok; ++i)
    for (Elem j = 0; j < d && tpl2.ok; ++j)
      for (Elem k = 0; k < d && tpl2.ok; ++k) {
        const Vec x = o.e(i), y = o.e(j), z = o.e(k);
        const Vec lhs = o.tr(o.sub(x, y), z);
        const Vec rhs = o.tr(x, o.tr(y, z)) - o.tr(y, o.tr(x, z));
        if (lhs != rhs) tpl2 = {tpl2.name, false, {i, j, k}, sides(lhs, rhs)};
      }

  const Rational half(1, 2);
  Check& tpl3 = r.add("TPL3");
  for (Elem i = 0; i < d && tpl3.ok; ++i)
    for (Elem j = 0; j < d && tpl3.ok; ++j) {
      const Vec x = o.e(i), y = o.e(j);
      const Vec inner = scaled(o.br(o.phi(x), y), half) + scaled(o.br(x, o.phi(y)), half) + o.tr(x, y) - o.tr(y, x);
      const Vec lhs = o.phi(inner);
      const Vec rhs = o.sub(x, y);
      if (lhs != rhs) tpl3 = {tpl3.name, false, {i, j}, sides(lhs, rhs)};
    }

  Check& tpl4 = r.add("TPL4");
  for (Elem i = 0; i < d && tpl4.ok; ++i)
    for (Elem j = 0; j < d && tpl4.ok; ++j) {
      const Vec lhs = o.tr(o.phi(o.e(i)), o.e(j));
      const Vec rhs = o.tr(o.e(i), o.e(j));
      if (lhs != rhs) tpl4 = {tpl4.name, false, {i, j}, sides(lhs, rhs)};
    }

  Check& tpl5 = r.add("TPL5");
  for (Elem i = 0; i < d && tpl5.ok; ++i) {
    const Vec lhs = o.phi(o.phi(o.e(i)));
    const Vec rhs = o.phi(o.e(i));
    if (lhs != rhs) tpl5 = {tpl5.name, false, {i}, sides(lhs, rhs)};
  }
  return r;
}

Report verify_post_lie(const TwistedPostLieAlgebra& L) {
  require_shapes(L);
  const Ops o{L};
  const std::size_t d = L.dim;
  Report r;
  check_antisymmetry(r, "bracket_antisymmetric", L.bracket);
  check_jacobi(r, "bracket_jacobi", L.bracket);
  check_tpl1(r, o);
  Check& c = r.add("post_lie");
  for (Elem i = 0; i < d && c.ok; ++i)
    for (Elem j = 0; j < d && c.ok; ++j)
      for (Elem k = 0; k < d && c.ok; ++k) {
        const Vec x = o.e(i), y = o.e(j), z = o.e(k);
        const Vec lhs = o.tr(o.br(x, y) + o.tr(x, y) - o.tr(y, x), z);
        const Vec rhs = o.tr(x, o.tr(y, z)) - o.tr(y, o.tr(x, z));
        if (lhs != rhs) c = {c.name, false, {i, j, k}, sides(lhs, rhs)};
      }
  return r;
}

namespace {

void require_verified(const TwistedPostLieAlgebra& L, const char* op) {
  const Report r = verify_tpla(L);
  if (!r.ok()) throw Error(ErrorCode::PreconditionFailed, fmt::format("{}: {}", op, r.failure_message()));
}

}  // namespace

SubAdjacentBracket sub_adjacent_bracket(const TwistedPostLieAlgebra& L) {
  require_verified(L, "sub_adjacent_bracket");
  const Ops o{L};
  const std::size_t d = L.dim;
  SubAdjacentBracket out{StructureTensor(d), {}};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec v = o.sub(o.e(i), o.e(j));
      for (std::size_t k = 0; k < d; ++k) out.bracket.at(i, j, k) = v[k];
    }
  check_antisymmetry(out.checks, "antisymmetric", out.bracket);
  check_jacobi(out.checks, "jacobi", out.bracket);
  Check& fixed = out.checks.add("fixed_by_phi");
  for (Elem i = 0; i < d && fixed.ok; ++i)
    for (Elem j = 0; j < d && fixed.ok; ++j) {
      const Vec v = out.bracket.apply(o.e(i), o.e(j));
      if (o.phi(v) != v) fixed = {fixed.name, false, {i, j}, sides(v, o.phi(v))};
    }
  return out;
}

std::vector<Vec> row_reduce(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational lead = rows[rank][c];
    for (auto& q : rows[rank]) q /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

ImageSubalgebra phi_image_subalgebra(const TwistedPostLieAlgebra& L) {
  require_verified(L, "phi_image_subalgebra");
  const Ops o{L};
  const std::size_t d = L.dim;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(o.phi(o.e(i)));
  ImageSubalgebra out{row_reduce(images), {}};

  Check& closed = out.checks.add("closed");
  for (Elem i = 0; i < out.basis.size() && closed.ok; ++i)
    for (Elem j = 0; j < out.basis.size() && closed.ok; ++j) {
      std::vector<Vec> extended = out.basis;
      extended.push_back(o.sub(out.basis[i], out.basis[j]));
      if (row_reduce(extended).size() != out.basis.size())
        closed = {closed.name, false, {i, j}, "[u_i,u_j]_|> = " + show(extended.back()) + " leaves phi(g)"};
    }
  return out;
}

namespace {

std::vector<Matrix> idempotent_candidates(std::size_t d) {
  std::vector<Matrix> out;
  if (d <= 3) {
    const std::size_t cells = d * d;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
      Matrix m = zero_matrix(d);
      for (std::size_t c = 0; c < cells; ++c)
        if (mask >> c & 1u) m[c / d][c % d] = 1;
      bool idem = true;
      for (std::size_t i = 0; i < d && idem; ++i) idem = image(m, image(m, basis_vector(d, i))) == image(m, basis_vector(d, i));
      if (idem) out.push_back(std::move(m));
    }
  } else {
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      Matrix m = zero_matrix(d);
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1u) m[i][i] = 1;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string fingerprint(const TwistedPostLieAlgebra& L) {
  std::string s;
  for (const auto& q : L.bracket.coeffs()) s += q.get_str() + ",";
  s += "|";
  for (const auto& q : L.tri.coeffs()) s += q.get_str() + ",";
  s += "|";
  for (const auto& row : L.phi)
    for (const auto& q : row) s += q.get_str() + ",";
  return s;
}

}  // namespace

std::vector<TwistedPostLieAlgebra> random_tpla_search(std::size_t d, std::uint64_t seed, std::size_t budget) {
  if (d == 0 || d > 4) throw Error(ErrorCode::PreconditionFailed, fmt::format("random_tpla_search needs 1 <= d <= 4, got {}", d));
  std::mt19937_64 rng(seed);
  const std::vector<Matrix> phis = idempotent_candidates(d);
  std::uniform_int_distribution<int> coeff(-1, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double densities[] = {0.0, 0.1, 0.25};
  std::uniform_int_distribution<std::size_t> pick_density(0, 2);
  std::uniform_int_distribution<std::size_t> pick_phi(0, phis.size() - 1);

  std::vector<TwistedPostLieAlgebra> out;
  std::set<std::string> seen;
  for (std::size_t trial = 0; trial < budget; ++trial) {
    TwistedPostLieAlgebra L;
    L.dim = d;
    L.bracket = StructureTensor(d);
    L.tri = StructureTensor(d);
    L.phi = phis[pick_phi(rng)];
    const double pb = densities[pick_density(rng)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (unit(rng) < pb) {
            const int v = coeff(rng);
            L.bracket.at(i, j, k) = v;
            L.bracket.at(j, i, k) = -v;
          }
    const double pt = densities[pick_density(rng)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (unit(rng) < pt) L.tri.at(i, j, k) = coeff(rng);
    if (!verify_tpla(L).ok()) continue;
    if (seen.insert(fingerprint(L)).second) out.push_back(std::move(L));
  }
  return out;
}

}  // namespace twistpost
