// Dense complex linear algebra for small observables: Hermitian matrices,
// a cyclic Jacobi eigensolver, qubit state construction and seeded random
// instance generation.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace uncertainty {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest dimension accepted by the random generators and guaranteed to
/// converge in the eigensolver.
inline constexpr std::size_t kMaxDim = 16;

/// Square dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  /// Builds from row-major entries; throws std::invalid_argument unless
  /// entries.size() == dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double> &values);

  std::size_t dim() const { return dim_; }
  Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<Complex> &entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
  friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
  friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
  friend ComplexMatrix operator*(Complex scale, const ComplexMatrix &m);
  friend ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v);
  friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// A complex matrix equal to its own conjugate transpose.
///
/// Construction rejects inputs whose entries differ from the conjugate of
/// their transposed partner by more than 1e-12 (absolute), then stores the
/// symmetrized (M + M^dagger) / 2 so the stored matrix is exactly Hermitian.
class HermitianMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit HermitianMatrix(const ComplexMatrix &m);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix &matrix() const { return matrix_; }
  const Complex &operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  friend bool operator==(const HermitianMatrix &a, const HermitianMatrix &b) = default;

 private:
  ComplexMatrix matrix_;
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are ascending;
/// eigenvectors[k] is the unit eigenvector paired with eigenvalues[k].
struct SpectralData {
  std::vector<double> eigenvalues;
  std::vector<ComplexVector> eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  /// Sum_k lambda_k |v_k><v_k|.
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Stops once the off-diagonal Frobenius norm is at
/// most 1e-13 * ||M||_F; throws std::runtime_error after 100 sweeps.
/// Equal eigenvalues keep the order in which the sweeps leave them.
SpectralData hermitian_eigendecompose(const HermitianMatrix &m);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>. theta in [0, pi],
/// phi in [0, 2 pi]; throws std::domain_error otherwise.
ComplexVector bloch_state(double theta, double phi);

/// AB - BA. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix commutator(const HermitianMatrix &a, const HermitianMatrix &b);

Complex inner_product(const ComplexVector &bra, const ComplexVector &ket);
double norm(const ComplexVector &v);

/// Strongly typed 64-bit seed.
struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// Fixed mixing function for per-task sub-seeds: splitmix64 finalizer over
/// the master seed combined with the task index.
Seed derive_seed(Seed master, std::uint64_t index);

/// Engine used for every random draw in the project.
using Engine = std::mt19937_64;
Engine make_engine(Seed seed);

/// (G + G^dagger) / 2 with G having i.i.d. standard complex Gaussian entries
/// (real and imaginary parts each of variance 1/2). dim in [1, 16].
HermitianMatrix random_hermitian(Seed seed, std::size_t dim);

/// Haar-random unit vector: a normalized standard complex Gaussian draw.
/// A zero draw is retried with the next derived sub-seed.
ComplexVector random_pure_state(Seed seed, std::size_t dim);

}  // namespace uncertainty
