#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiver/operators.hpp"
#include "quiver/quiver.hpp"

namespace quiver {

/// Eigenvalues of a symmetric matrix, sorted non-increasingly.
struct Spectrum {
  std::vector<double> values;
  double residual = 0.0;  // max over eigenpairs of ||M v - lambda v||_inf

  std::size_t size() const noexcept { return values.size(); }
  /// 1-based, matching lambda_1 >= lambda_2 >= ...; 0 past the end.
  double lambda(std::size_t j) const noexcept { return j >= 1 && j <= values.size() ? values[j - 1] : 0.0; }
  /// Sum of the k largest eigenvalues.
  double partial_sum(std::size_t k) const;
};

struct EigenDecomposition {
  Spectrum spectrum;
  RealMatrix vectors;  // column j belongs to spectrum.values[j]
};

/// Throws PreconditionError for non-symmetric input and NumericalError when
/// the residual exceeds 1e-10 * max(1, ||M||_inf).
Spectrum eigen_desc(const RealMatrix& m);
Spectrum eigen_desc(const IntMatrix& m);
EigenDecomposition eigen_decompose(const RealMatrix& m);

// Tolerance policy, scaled by the trace of K.
double kernel_threshold(double trace);
double inequality_slack(double trace);

constexpr long long brouwer_bound(long long m, long long r, long long k) { return m + r + k * (k + 1) / 2; }
constexpr long long lew_bound(long long m, long long r, long long k) { return m + r + k * k; }

struct SequenceRow {
  std::size_t k = 0;
  double S = 0.0;   // sum of k largest Kirchhoff eigenvalues
  long long D = 0;  // sum of k largest degrees
  long long B = 0;  // m + r + k(k+1)/2
  long long H = 0;  // m + r + k^2
  long long U = 0;  // sum_{j<=k} (d_j + d_{j+1}), d_{n+1} = 0
  long long lower = 0;  // d_k - k + 1, pointwise lower bound on lambda_k
  double A = 0.0;   // sum of k largest signless eigenvalues
};

struct SequenceTable {
  std::size_t n = 0;
  std::size_t m = 0;
  long long r = 0;
  long long trace = 0;
  DegreeSequence degrees;
  Spectrum kirchhoff;
  Spectrum signless;
  std::vector<SequenceRow> rows;  // rows[k-1] holds index k

  const SequenceRow& row(std::size_t k) const { return rows.at(k - 1); }
};

SequenceTable sequence_table(const Quiver& q);

/// CSV with header k,S,D,B,H,U2D,A.
std::string to_csv(const SequenceTable& t);

struct Betti {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
};

/// Kernel dimensions of K and K1. Throws NumericalError when an eigenvalue
/// sits inside the ambiguity band around the kernel threshold or when
/// b0 - b1 != n - m.
Betti betti(const Quiver& q);

/// Number of eigenvalues counted as zero by the kernel threshold; throws
/// NumericalError for eigenvalues inside the ambiguity band.
std::size_t kernel_dimension(const Spectrum& s, double threshold);

double spectral_radius(const Quiver& q);

/// Max difference between the nonzero spectra of K and K1, after padding
/// the shorter list with zeros.
double essential_isospectral_margin(const Quiver& q);

}  // namespace quiver
