#include "quiver/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace quiver {

double Spectrum::partial_sum(std::size_t k) const {
  k = std::min(k, values.size());
  return std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

namespace {

void require_symmetric(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("eigensolver needs a square matrix");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw PreconditionError("eigensolver needs a symmetric matrix");
}

}  // namespace

EigenDecomposition eigen_decompose(const RealMatrix& m) {
  require_symmetric(m);
  EigenDecomposition out;
  const Eigen::Index N = m.rows();
  if (N == 0) {
    out.vectors = RealMatrix(0, 0);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");

  // Eigen returns ascending order; reverse into lambda_1 >= lambda_2 >= ...
  out.spectrum.values.resize(static_cast<std::size_t>(N));
  out.vectors.resize(N, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    out.spectrum.values[static_cast<std::size_t>(j)] = solver.eigenvalues()(N - 1 - j);
    out.vectors.col(j) = solver.eigenvectors().col(N - 1 - j);
  }

  double residual = 0.0;
  for (Eigen::Index j = 0; j < N; ++j) {
    const Eigen::VectorXd r = m * out.vectors.col(j) - out.spectrum.values[static_cast<std::size_t>(j)] * out.vectors.col(j);
    residual = std::max(residual, r.cwiseAbs().maxCoeff());
  }
  out.spectrum.residual = residual;
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  if (residual > 1e-10 * std::max(1.0, norm))
    throw NumericalError("eigensolver residual " + std::to_string(residual) + " outside contract");
  return out;
}

Spectrum eigen_desc(const RealMatrix& m) { return eigen_decompose(m).spectrum; }

Spectrum eigen_desc(const IntMatrix& m) { return eigen_desc(to_real(m)); }

double kernel_threshold(double trace) { return 1e-9 * std::max(1.0, trace); }

double inequality_slack(double trace) { return 1e-7 * std::max(1.0, trace); }

SequenceTable sequence_table(const Quiver& q) {
  SequenceTable t;
  t.n = q.vertex_count();
  t.m = q.edge_count();
  t.r = redundancy(q);
  t.degrees = degrees(q);
  const IntMatrix K = kirchhoff(q);
  t.trace = K.trace();
  t.kirchhoff = eigen_desc(K);
  t.signless = eigen_desc(IntMatrix(K.cwiseAbs()));

  const auto m = static_cast<long long>(t.m);
  const auto& d = t.degrees.sorted;
  double S = 0.0;
  double A = 0.0;
  long long D = 0;
  long long U = 0;
  t.rows.reserve(t.n);
  for (std::size_t k = 1; k <= t.n; ++k) {
    S += t.kirchhoff.lambda(k);
    A += t.signless.lambda(k);
    D += d[k - 1];
    U += d[k - 1] + (k < t.n ? d[k] : 0);
    const auto kk = static_cast<long long>(k);
    t.rows.push_back({k, S, D, brouwer_bound(m, t.r, kk), lew_bound(m, t.r, kk), U, d[k - 1] - kk + 1, A});
  }
  return t;
}

std::string to_csv(const SequenceTable& t) {
  std::ostringstream out;
  out.precision(12);
  out << "k,S,D,B,H,U2D,A\n";
  for (const auto& row : t.rows)
    out << row.k << ',' << row.S << ',' << row.D << ',' << row.B << ',' << row.H << ',' << row.U << ',' << row.A << '\n';
  return out.str();
}

std::size_t kernel_dimension(const Spectrum& s, double threshold) {
  std::size_t zeros = 0;
  for (double v : s.values) {
    const double a = std::abs(v);
    if (a <= threshold / 100.0) {
      ++zeros;
    } else if (a < threshold * 100.0) {
      std::ostringstream msg;
      msg << "eigenvalue " << v << " is too close to the kernel threshold " << threshold;
      throw NumericalError(msg.str());
    }
  }
  return zeros;
}

Betti betti(const Quiver& q) {
  const IntMatrix K = kirchhoff(q);
  const double threshold = kernel_threshold(static_cast<double>(K.trace()));
  Betti b;
  b.b0 = kernel_dimension(eigen_desc(K), threshold);
  b.b1 = q.edge_count() == 0 ? 0 : kernel_dimension(eigen_desc(one_form(q)), threshold);
  const auto chi = static_cast<long long>(q.vertex_count()) - static_cast<long long>(q.edge_count());
  if (static_cast<long long>(b.b0) - static_cast<long long>(b.b1) != chi)
    throw NumericalError("kernel dimensions violate b0 - b1 = n - m");
  return b;
}

double spectral_radius(const Quiver& q) { return eigen_desc(kirchhoff(q)).lambda(1); }

double essential_isospectral_margin(const Quiver& q) {
  const IntMatrix K = kirchhoff(q);
  const double threshold = kernel_threshold(static_cast<double>(K.trace()));
  const auto nonzero = [threshold](const Spectrum& s) {
    std::vector<double> out;
    for (double v : s.values)
      if (std::abs(v) > threshold) out.push_back(v);
    return out;
  };
  auto a = nonzero(eigen_desc(K));
  auto b = q.edge_count() == 0 ? std::vector<double>{} : nonzero(eigen_desc(one_form(q)));
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0.0);
  b.resize(len, 0.0);
  double margin = 0.0;
  for (std::size_t i = 0; i < len; ++i) margin = std::max(margin, std::abs(a[i] - b[i]));
  return margin;
}

}  // namespace quiver
