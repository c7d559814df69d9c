#pragma once

// Reference implementations used only by the tests. Nothing here calls the
// library's own numerics, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

// Cyclic Jacobi rotations on a symmetric matrix. Slow and simple.
inline std::vector<double> jacobi_eigenvalues(Dense a, int sweeps = 100) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// Cofactor expansion along the first row. Fine up to about 9x9.
inline long long laplace_determinant(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const long long sign = col % 2 == 0 ? 1 : -1;
    det += sign * m[0][col] * laplace_determinant(minor);
  }
  return det;
}

// Kirchhoff matrix straight from degrees and adjacency counts. A loop adds
// one to the degree of its vertex and nothing off the diagonal.
inline std::vector<std::vector<long long>> kirchhoff_from_edges(std::size_t n,
                                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<long long>> k(n, std::vector<long long>(n, 0));
  for (auto [a, b] : edges) {
    if (a == b) {
      k[a][a] += 1;
      continue;
    }
    k[a][a] += 1;
    k[b][b] += 1;
    k[a][b] -= 1;
    k[b][a] -= 1;
  }
  return k;
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::vector<double> cycle_spectrum(std::size_t n) {
  std::vector<double> v;
  for (std::size_t j = 0; j < n; ++j) v.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * double(j) / double(n)));
  return sorted_desc(v);
}

inline std::vector<double> path_spectrum(std::size_t n) {
  std::vector<double> v;
  for (std::size_t j = 0; j < n; ++j) v.push_back(2.0 - 2.0 * std::cos(std::numbers::pi * double(j) / double(n)));
  return sorted_desc(v);
}

inline std::vector<double> complete_spectrum(std::size_t n) {
  std::vector<double> v(n, double(n));
  v.back() = 0.0;
  return v;
}

// Star on n vertices: n, then 1 with multiplicity n-2, then 0.
inline std::vector<double> star_spectrum(std::size_t n) {
  if (n == 1) return {0.0};
  std::vector<double> v(n, 1.0);
  v.front() = double(n);
  v.back() = 0.0;
  return v;
}

}  // namespace oracle
