#include <gtest/gtest.h>

#include "oracle.hpp"
#include "quiver/families.hpp"
#include "quiver/operators.hpp"
#include "quiver/spectra.hpp"

using namespace quiver;

namespace {

std::vector<std::vector<long long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const Quiver& q) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : q.edges()) out.emplace_back(e.tail, e.head);
  return out;
}

}  // namespace

TEST(OperatorsTest, GradientConvention) {
  const IntMatrix F = gradient(Quiver(3, {{0, 1}, {2, 2}, {2, 1}}));
  IntMatrix expected(3, 3);
  expected << 1, -1, 0, 0, 0, 1, 0, -1, 1;
  EXPECT_EQ(F, expected);
}

TEST(OperatorsTest, CloverKirchhoff) {
  const IntMatrix K = kirchhoff(clover(3));
  ASSERT_EQ(K.rows(), 1);
  EXPECT_EQ(K(0, 0), 3);
  EXPECT_EQ(signless(clover(3))(0, 0), 3);
}

TEST(OperatorsTest, KirchhoffMatchesDegreeMinusAdjacency) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Quiver q = random_quiver(8, 10, rng.uniform(6), rng.uniform(6), rng);
    EXPECT_EQ(to_rows(kirchhoff(q)), oracle::kirchhoff_from_edges(8, edge_pairs(q)));
  }
}

TEST(OperatorsTest, SignlessIsAbsoluteValueOfKirchhoff) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Quiver q = random_quiver(7, 9, rng.uniform(5), rng.uniform(5), rng);
    EXPECT_EQ(signless(q), kirchhoff(q).cwiseAbs());
  }
}

TEST(OperatorsTest, KirchhoffIsOrientationIndependent) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Quiver q = random_quiver(6, 8, 2, 3, rng);
    Quiver flipped = q;
    for (std::size_t k = 0; k < q.edge_count(); k += 2) flipped = flip_edge(flipped, k);
    EXPECT_EQ(kirchhoff(flipped), kirchhoff(q));
    const Spectrum a = eigen_desc(one_form(q));
    const Spectrum b = eigen_desc(one_form(flipped));
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a.values[j], b.values[j], 1e-9);
  }
}

TEST(OperatorsTest, ExteriorDerivativeSquaresToZero) {
  SplitMix64 rng(6);
  const Quiver q = random_quiver(6, 9, 3, 2, rng);
  const IntMatrix d = exterior_derivative(q);
  EXPECT_EQ(d * d, IntMatrix::Zero(d.rows(), d.cols()));
  const IntMatrix D = dirac(q);
  EXPECT_EQ(D * D, hodge(q));
}

TEST(OperatorsTest, HodgeBlocks) {
  const Quiver q = cycle(4);
  const IntMatrix H = hodge(q);
  EXPECT_EQ(H.rows(), 8);
  EXPECT_EQ(H.topLeftCorner(4, 4), kirchhoff(q));
  EXPECT_EQ(H.bottomRightCorner(4, 4), one_form(q));
  EXPECT_EQ(H.topRightCorner(4, 4), IntMatrix::Zero(4, 4));
  EXPECT_EQ(signless_hodge(q).topLeftCorner(4, 4), signless(q));
}

TEST(OperatorsTest, IncidencePackAgrees) {
  const Quiver q = k7_ribbon_fixture();
  const IncidencePack p = incidence_pack(q);
  EXPECT_EQ(p.K, kirchhoff(q));
  EXPECT_EQ(p.K1, one_form(q));
  EXPECT_EQ(p.signlessK, signless(q));
  EXPECT_EQ(p.hodge, hodge(q));
}

TEST(OperatorsTest, SupertraceOfHodgeIsZero) {
  SplitMix64 rng(7);
  const Quiver q = random_quiver(9, 14, 2, 4, rng);
  const IntMatrix H = hodge(q);
  EXPECT_EQ(supertrace(H, q.vertex_count()), 0);
  EXPECT_EQ(supertrace(IntMatrix(H * H), q.vertex_count()), 0);
}

TEST(OperatorsTest, HeatSupertraceIsEulerCharacteristic) {
  SplitMix64 rng(8);
  const Quiver q = random_quiver(8, 12, 3, 3, rng);
  const double chi = double(q.vertex_count()) - double(q.edge_count());
  for (double t : {0.0, 0.1, 1.0, 10.0}) EXPECT_NEAR(heat_supertrace(q, t), chi, 1e-8);
}

TEST(ConnectionTest, SingleEdge) {
  const Quiver q = path(2);
  IntMatrix L(3, 3), g(3, 3);
  L << 1, 0, 1, 0, 1, 1, 1, 1, 1;
  g << 0, -1, 1, -1, 0, 1, 1, 1, -1;
  EXPECT_EQ(connection_matrix(q), L);
  EXPECT_EQ(green_function(q), g);
  EXPECT_EQ(L * g, IntMatrix::Identity(3, 3));
}

TEST(ConnectionTest, UnimodularAndSignature) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.uniform(6);
    const Quiver q = random_quiver(n, rng.uniform(n * (n - 1) / 2 + 1), 0, 0, rng);
    const ConnectionPack pack = connection(q);
    EXPECT_EQ(pack.L * pack.g, IntMatrix::Identity(pack.L.rows(), pack.L.cols()));
    EXPECT_EQ(abs(pack.detL), 1);
    EXPECT_EQ(pack.signature(), static_cast<long long>(n) - static_cast<long long>(q.edge_count()));
    if (pack.L.rows() <= 9) EXPECT_EQ(BigInt(oracle::laplace_determinant(to_rows(pack.L))), pack.detL);
  }
}

TEST(ConnectionTest, HydrogenIdentity) {
  const Quiver q = cycle(5);
  const IntMatrix diff = connection_matrix(q) - green_function(q);
  const IntMatrix expected = signless_hodge(q);
  EXPECT_EQ(diff, expected);
}

TEST(ConnectionTest, RejectsNonSimple) {
  EXPECT_THROW(connection(ribbon(2)), PreconditionError);
  EXPECT_THROW(connection(clover(1)), PreconditionError);
}

TEST(DeterminantTest, AgainstCofactorExpansion) {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.uniform(6);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng.uniform(11)) - 5;
    EXPECT_EQ(exact_determinant(m), BigInt(oracle::laplace_determinant(to_rows(m))));
  }
}

TEST(DeterminantTest, SingularAndPivoting) {
  IntMatrix m(3, 3);
  m << 0, 1, 2, 1, 0, 3, 4, -3, 8;
  EXPECT_EQ(exact_determinant(m), BigInt(-2));
  IntMatrix s(2, 2);
  s << 1, 2, 2, 4;
  EXPECT_EQ(exact_determinant(s), BigInt(0));
}

TEST(ExportTest, CsvAndJson) {
  IntMatrix m(2, 2);
  m << 1, -1, -1, 1;
  EXPECT_EQ(to_csv(m), "1,-1\n-1,1\n");
  EXPECT_EQ(to_json(m), R"({"rows":2,"cols":2,"data":[1,-1,-1,1]})");
}
