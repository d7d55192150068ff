// Test-only oracles, written independently of the library's code paths.
//
// Qubit bounds come straight from the Bloch vector; the generic route uses
// Eigen's self-adjoint solver instead of the library's Jacobi sweeps; the
// rank-pairing oracle enumerates every pairing.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <numeric>
#include <vector>

#include "uncertainty/qmath.h"

namespace uncertainty::oracle {

struct BlochVector {
  double x, y, z;
};

inline BlochVector bloch_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// u-values of a +-1 observable whose mean is m: outcome +1 has probability
/// (1 + m) / 2 and deviation 1 - m; outcome -1 has (1 - m) / 2 and 1 + m.
inline std::array<double, 2> qubit_u(double m) {
  std::array<double, 2> u = {std::abs(1 - m) * std::sqrt(std::max(0.0, (1 + m) / 2)),
                             std::abs(-1 - m) * std::sqrt(std::max(0.0, (1 - m) / 2))};
  std::sort(u.begin(), u.end());
  return u;
}

inline double qubit_pro_hr(BlochVector s) { return std::abs(s.x * s.y * s.z) / 8; }
inline double qubit_pro_fd(BlochVector s) { return std::abs(s.x * s.y * s.z) / (3 * std::sqrt(3.0)); }

inline double qubit_pro_closed(BlochVector s) {
  const std::array u = {qubit_u(s.x), qubit_u(s.y), qubit_u(s.z)};
  double total = 0;
  for (int k = 0; k < 2; ++k) {
    total += std::cbrt(u[0][k] * u[0][k] * u[1][k] * u[1][k] * u[2][k] * u[2][k]);
  }
  return total * total * total;
}

inline double qubit_sum_ours(BlochVector s) {
  const std::array u = {qubit_u(s.x), qubit_u(s.y), qubit_u(s.z)};
  double squares = 0;
  double sum = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double sq = std::pow(u[i][0] + u[j][0], 2) + std::pow(u[i][1] + u[j][1], 2);
      squares += sq;
      sum += std::sqrt(sq);
    }
  }
  return squares - sum * sum / 4;
}

/// Pure states only: Var(S_i - S_j) = 2 - (s_i - s_j)^2 = (s_i + s_j)^2 + 2 s_k^2
/// when |s| = 1.
inline double qubit_sum_song(BlochVector s) {
  const double total = s.x + s.y + s.z;
  const double d12 = std::sqrt(std::pow(s.x + s.y, 2) + 2 * s.z * s.z);
  const double d13 = std::sqrt(std::pow(s.x + s.z, 2) + 2 * s.y * s.y);
  const double d23 = std::sqrt(std::pow(s.y + s.z, 2) + 2 * s.x * s.x);
  return (3 - total * total) / 3 + std::pow(d12 + d13 + d23, 2) / 9;
}

inline double qubit_sum_fd(BlochVector s) {
  return (std::abs(s.x) + std::abs(s.y) + std::abs(s.z)) / std::sqrt(3.0);
}

/// max over every reordering of rows[1..] of sum_k prod_i rows[i][k]^(2/N).
inline double best_pairing_carlson_sum(std::vector<std::vector<double>> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  for (auto &row : rows) {
    std::sort(row.begin(), row.end());
  }
  double best = 0;
  // Odometer over permutations of each row after the first.
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == n) {
      double sum = 0;
      for (std::size_t k = 0; k < m; ++k) {
        double product = 1;
        for (const auto &row : rows) {
          product *= row[k] * row[k];
        }
        sum += std::pow(product, 1.0 / static_cast<double>(n));
      }
      best = std::max(best, sum);
      return;
    }
    std::sort(rows[i].begin(), rows[i].end());
    do {
      recurse(i + 1);
    } while (std::next_permutation(rows[i].begin(), rows[i].end()));
    std::sort(rows[i].begin(), rows[i].end());
  };
  recurse(1);
  return best;
}

/// Sorted |a_k - <A>| sqrt(F_k) through Eigen's solver.
inline std::vector<double> eigen_u_vector(const ComplexMatrix &a, const ComplexVector &psi, bool signed_values) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  Eigen::VectorXcd v(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    v(r) = psi[r];
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = a(r, c);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const double mean = v.dot(m * v).real();
  std::vector<double> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double f = std::norm(solver.eigenvectors().col(k).dot(v));
    const double x = (solver.eigenvalues()(k) - mean) * std::sqrt(f);
    out.push_back(signed_values ? x : std::abs(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> eigen_eigenvalues(const ComplexMatrix &a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = a(r, c);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

}  // namespace uncertainty::oracle
