#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiver/error.hpp"
#include "quiver/quiver.hpp"

namespace quiver {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::MatrixXd;
using BigInt = boost::multiprecision::cpp_int;

/// m x n signed incidence matrix. Row k has +1 at the tail and -1 at the
/// head of edge k; a loop row carries a single +1.
IntMatrix gradient(const Quiver& q);

/// K = F^T F = D - A.
IntMatrix kirchhoff(const Quiver& q);
/// K1 = F F^T, the Laplacian on 1-forms. Depends on orientation; its
/// spectrum does not.
IntMatrix one_form(const Quiver& q);
/// |K| = D + A = |F|^T |F|.
IntMatrix signless(const Quiver& q);
/// |F| |F|^T.
IntMatrix signless_one_form(const Quiver& q);

/// Exterior derivative on forms: the (n+m) x (n+m) matrix with F in the
/// lower-left block. d * d = 0.
IntMatrix exterior_derivative(const Quiver& q);
/// d + d^T. Its square is the Hodge Laplacian.
IntMatrix dirac(const Quiver& q);
/// diag(K, K1).
IntMatrix hodge(const Quiver& q);
/// diag(|K|, |F||F|^T).
IntMatrix signless_hodge(const Quiver& q);

IntMatrix block_diagonal(const IntMatrix& upper, const IntMatrix& lower);

struct IncidencePack {
  IntMatrix F;
  IntMatrix K;
  IntMatrix K1;
  IntMatrix signlessK;
  IntMatrix signlessK1;
  IntMatrix hodge;
  IntMatrix signlessHodge;
};

IncidencePack incidence_pack(const Quiver& q);

/// A simplex of the one-dimensional complex of a simple graph.
struct Simplex {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  Vertex a = 0;  // the vertex, or the tail of the edge
  Vertex b = 0;  // equals a for vertices

  int dimension() const noexcept { return kind == Kind::vertex ? 0 : 1; }
  bool contains(Vertex v) const noexcept { return a == v || b == v; }
};

struct ConnectionPack {
  std::vector<Simplex> simplices;  // all n vertices, then all m edges
  IntMatrix L;                     // 0/1 intersection matrix
  IntMatrix g;                     // Green function, L^{-1}
  BigInt detL;
  std::size_t positive = 0;  // eigenvalue counts of L
  std::size_t negative = 0;

  long long signature() const noexcept { return static_cast<long long>(positive) - static_cast<long long>(negative); }
};

/// Connection matrix of the vertex/edge complex, with its inverse from the
/// star formula g(x, y) = w(x) w(y) chi(U(x) n U(y)). Requires a simple graph.
ConnectionPack connection(const Quiver& q);

IntMatrix connection_matrix(const Quiver& q);
IntMatrix green_function(const Quiver& q);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt exact_determinant(const IntMatrix& m);

/// Sum of the first `zero_forms` diagonal entries minus the rest.
template <typename Derived>
auto supertrace(const Eigen::MatrixBase<Derived>& m, std::size_t zero_forms) {
  if (m.rows() != m.cols()) throw PreconditionError("supertrace needs a square matrix");
  if (zero_forms > static_cast<std::size_t>(m.rows()))
    throw PreconditionError("supertrace: 0-form count exceeds matrix size");
  using Scalar = typename Derived::Scalar;
  Scalar s{0};
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if (static_cast<std::size_t>(k) < zero_forms)
      s += m(k, k);
    else
      s -= m(k, k);
  }
  return s;
}

/// str(exp(-t H)) for the Hodge Laplacian H, via eigendecomposition of the
/// two symmetric blocks. Equals n - m for every t >= 0.
double heat_supertrace(const Quiver& q, double t);

RealMatrix to_real(const IntMatrix& m);

std::string to_csv(const IntMatrix& m);
/// {"rows": r, "cols": c, "data": [row-major entries]}
std::string to_json(const IntMatrix& m);

}  // namespace quiver
