#include "quiver/operators.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "quiver/spectra.hpp"

namespace quiver {

IntMatrix gradient(const Quiver& q) {
  IntMatrix F = IntMatrix::Zero(static_cast<Eigen::Index>(q.edge_count()), static_cast<Eigen::Index>(q.vertex_count()));
  for (std::size_t k = 0; k < q.edge_count(); ++k) {
    const Edge& e = q.edges()[k];
    const auto row = static_cast<Eigen::Index>(k);
    F(row, static_cast<Eigen::Index>(e.tail)) += 1;
    if (!e.is_loop()) F(row, static_cast<Eigen::Index>(e.head)) -= 1;
  }
  return F;
}

IntMatrix kirchhoff(const Quiver& q) {
  const auto n = static_cast<Eigen::Index>(q.vertex_count());
  IntMatrix K = IntMatrix::Zero(n, n);
  for (const Edge& e : q.edges()) {
    const auto a = static_cast<Eigen::Index>(e.tail);
    const auto b = static_cast<Eigen::Index>(e.head);
    K(a, a) += 1;
    if (e.is_loop()) continue;
    K(b, b) += 1;
    K(a, b) -= 1;
    K(b, a) -= 1;
  }
  return K;
}

IntMatrix one_form(const Quiver& q) {
  const IntMatrix F = gradient(q);
  return F * F.transpose();
}

IntMatrix signless(const Quiver& q) { return kirchhoff(q).cwiseAbs(); }

IntMatrix signless_one_form(const Quiver& q) {
  const IntMatrix absF = gradient(q).cwiseAbs();
  return absF * absF.transpose();
}

IntMatrix block_diagonal(const IntMatrix& upper, const IntMatrix& lower) {
  const Eigen::Index n = upper.rows();
  const Eigen::Index m = lower.rows();
  IntMatrix out = IntMatrix::Zero(n + m, n + m);
  out.topLeftCorner(n, n) = upper;
  out.bottomRightCorner(m, m) = lower;
  return out;
}

IntMatrix exterior_derivative(const Quiver& q) {
  const auto n = static_cast<Eigen::Index>(q.vertex_count());
  const auto m = static_cast<Eigen::Index>(q.edge_count());
  IntMatrix d = IntMatrix::Zero(n + m, n + m);
  d.bottomLeftCorner(m, n) = gradient(q);
  return d;
}

IntMatrix dirac(const Quiver& q) {
  const IntMatrix d = exterior_derivative(q);
  return d + d.transpose();
}

IntMatrix hodge(const Quiver& q) { return block_diagonal(kirchhoff(q), one_form(q)); }

IntMatrix signless_hodge(const Quiver& q) { return block_diagonal(signless(q), signless_one_form(q)); }

IncidencePack incidence_pack(const Quiver& q) {
  IncidencePack p;
  p.F = gradient(q);
  p.K = kirchhoff(q);
  p.K1 = p.F * p.F.transpose();
  p.signlessK = p.K.cwiseAbs();
  const IntMatrix absF = p.F.cwiseAbs();
  p.signlessK1 = absF * absF.transpose();
  p.hodge = block_diagonal(p.K, p.K1);
  p.signlessHodge = block_diagonal(p.signlessK, p.signlessK1);
  return p;
}

namespace {

std::vector<Simplex> simplices_of(const Quiver& q) {
  std::vector<Simplex> s;
  s.reserve(q.vertex_count() + q.edge_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v) s.push_back({Simplex::Kind::vertex, v, v});
  for (const Edge& e : q.edges()) s.push_back({Simplex::Kind::edge, e.tail, e.head});
  return s;
}

bool intersect(const Simplex& x, const Simplex& y) {
  return x.contains(y.a) || x.contains(y.b);
}

// chi(U(x) n U(y)) where U(x) is the set of simplices containing x.
long long star_euler(const Simplex& x, const Simplex& y, bool same, const DegreeSequence& deg,
                     const std::vector<std::vector<bool>>& adjacent) {
  using K = Simplex::Kind;
  if (x.kind == K::vertex && y.kind == K::vertex) {
    if (same) return 1 - deg.per_vertex[x.a];
    return adjacent[x.a][y.a] ? -1 : 0;  // the connecting edge, if any
  }
  if (x.kind == K::edge && y.kind == K::edge) return same ? -1 : 0;
  const Simplex& v = x.kind == K::vertex ? x : y;
  const Simplex& e = x.kind == K::vertex ? y : x;
  return e.contains(v.a) ? -1 : 0;
}

}  // namespace

IntMatrix connection_matrix(const Quiver& q) {
  if (!q.is_simple()) throw PreconditionError("connection matrix requires a simple graph");
  const auto s = simplices_of(q);
  const auto N = static_cast<Eigen::Index>(s.size());
  IntMatrix L(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) L(i, j) = intersect(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]) ? 1 : 0;
  return L;
}

IntMatrix green_function(const Quiver& q) {
  if (!q.is_simple()) throw PreconditionError("Green function requires a simple graph");
  const auto s = simplices_of(q);
  const auto deg = degrees(q);
  std::vector<std::vector<bool>> adjacent(q.vertex_count(), std::vector<bool>(q.vertex_count(), false));
  for (const Edge& e : q.edges()) adjacent[e.tail][e.head] = adjacent[e.head][e.tail] = true;

  const auto N = static_cast<Eigen::Index>(s.size());
  IntMatrix g(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) {
      const auto& x = s[static_cast<std::size_t>(i)];
      const auto& y = s[static_cast<std::size_t>(j)];
      const long long w = (x.dimension() + y.dimension()) % 2 == 0 ? 1 : -1;
      g(i, j) = w * star_euler(x, y, i == j, deg, adjacent);
    }
  }
  return g;
}

BigInt exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant needs a square matrix");
  const auto N = static_cast<std::size_t>(m.rows());
  if (N == 0) return BigInt(1);
  std::vector<std::vector<BigInt>> a(N, std::vector<BigInt>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < N && a[pivot][k] == 0) ++pivot;
      if (pivot == N) return BigInt(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign * a[N - 1][N - 1];
}

ConnectionPack connection(const Quiver& q) {
  ConnectionPack p;
  p.simplices = simplices_of(q);
  p.L = connection_matrix(q);
  p.g = green_function(q);
  p.detL = exact_determinant(p.L);
  const Spectrum s = eigen_desc(p.L);
  for (double v : s.values) {
    if (std::abs(v) <= 1e-9) throw NumericalError("connection matrix has an eigenvalue indistinguishable from zero");
    (v > 0 ? p.positive : p.negative) += 1;
  }
  return p;
}

double heat_supertrace(const Quiver& q, double t) {
  if (t < 0) throw PreconditionError("heat supertrace needs t >= 0");
  const auto heat = [t](const IntMatrix& block) -> RealMatrix {
    if (block.rows() == 0) return RealMatrix(0, 0);
    const auto ed = eigen_decompose(to_real(block));
    Eigen::VectorXd w(static_cast<Eigen::Index>(ed.spectrum.size()));
    for (std::size_t j = 0; j < ed.spectrum.size(); ++j) w(static_cast<Eigen::Index>(j)) = std::exp(-t * ed.spectrum.values[j]);
    return ed.vectors * w.asDiagonal() * ed.vectors.transpose();
  };
  const RealMatrix e0 = heat(kirchhoff(q));
  const RealMatrix e1 = heat(one_form(q));
  const Eigen::Index n = e0.rows();
  const Eigen::Index m = e1.rows();
  RealMatrix full = RealMatrix::Zero(n + m, n + m);
  full.topLeftCorner(n, n) = e0;
  full.bottomRightCorner(m, m) = e1;
  return supertrace(full, static_cast<std::size_t>(n));
}

RealMatrix to_real(const IntMatrix& m) { return m.cast<double>(); }

std::string to_csv(const IntMatrix& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const IntMatrix& m) {
  std::ostringstream out;
  out << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"data\":[";
  bool first = true;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!first) out << ',';
      out << m(i, j);
      first = false;
    }
  out << "]}";
  return out.str();
}

}  // namespace quiver
