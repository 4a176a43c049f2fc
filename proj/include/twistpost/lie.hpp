#pragma once

#include <cstdint>
#include <vector>

#include "twistpost/rational.hpp"
#include "twistpost/report.hpp"

namespace twistpost {

using Vec = std::vector<Rational>;

/// Row convention: m[i][k] is the coefficient of e_k in phi(e_i).
using Matrix = std::vector<std::vector<Rational>>;

/// Bilinear map in a fixed basis: c(i,j,k) is the coefficient of e_k in
/// op(e_i, e_j).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  Vec apply(const Vec& x, const Vec& y) const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

Vec basis_vector(std::size_t dim, std::size_t i);
Vec image(const Matrix& m, const Vec& x);
Matrix identity_matrix(std::size_t dim);
Matrix zero_matrix(std::size_t dim);

/// Lie algebra (g, [,]) with |> and phi.
struct TwistedPostLieAlgebra {
  std::size_t dim = 0;
  StructureTensor bracket;
  StructureTensor tri;
  Matrix phi;

  friend bool operator==(const TwistedPostLieAlgebra&, const TwistedPostLieAlgebra&) = default;
};

/// All checks run on basis elements; by multilinearity this decides them on
/// all of g (each side of every equation is linear in each argument).
///   bracket_antisymmetric, bracket_jacobi,
///   TPL1  x|>[y,z] = [x|>y,z] + [y,x|>z]
///   TPL2  ([phi x,phi y] + x|>phi y - y|>phi x)|>z = x|>(y|>z) - y|>(x|>z)
///   TPL3  phi(1/2[phi x,y] + 1/2[x,phi y] + x|>y - y|>x)
///             = [phi x,phi y] + x|>phi y - y|>phi x
///   TPL4  phi(x)|>y = x|>y
///   TPL5  phi^2 = phi
/// The right side of TPL3 is the sub-adjacent bracket [x,y]_|>.
/// Throws DimensionMismatch when the shapes disagree.
Report verify_tpla(const TwistedPostLieAlgebra& L);

/// TPL1 and the post-Lie identity ([x,y] + x|>y - y|>x)|>z =
/// x|>(y|>z) - y|>(x|>z), ignoring phi.
Report verify_post_lie(const TwistedPostLieAlgebra& L);

struct SubAdjacentBracket {
  StructureTensor bracket;  // [x,y]_|> = [phi x,phi y] + x|>phi y - y|>phi x
  Report checks;            // antisymmetric, jacobi, fixed_by_phi
};

/// Throws PreconditionFailed unless verify_tpla passes.
SubAdjacentBracket sub_adjacent_bracket(const TwistedPostLieAlgebra& L);

struct ImageSubalgebra {
  std::vector<Vec> basis;  // reduced row echelon basis of phi(g)
  Report checks;           // closed
};

/// Throws PreconditionFailed unless verify_tpla passes.
ImageSubalgebra phi_image_subalgebra(const TwistedPostLieAlgebra& L);

/// Reduced row echelon form of the rows, zero rows dropped.
std::vector<Vec> row_reduce(std::vector<Vec> rows);

/// Deterministic random search with mt19937_64(seed): `budget` candidates
/// with entries in {-1,0,1}, antisymmetric brackets and phi drawn from the
/// idempotent 0/1 matrices. Returns the distinct candidates that pass
/// verify_tpla, in discovery order. Requires 1 <= d <= 4.
std::vector<TwistedPostLieAlgebra> random_tpla_search(std::size_t d, std::uint64_t seed, std::size_t budget);

}  // namespace twistpost
