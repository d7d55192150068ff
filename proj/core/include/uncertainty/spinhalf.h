// Spin-1/2 specializations for the Pauli triple S_i = sigma_i (eigenvalues
// +1 and -1, hbar = 1). Closed forms here depend only on <S_1>, <S_2>, <S_3>
// and serve as a second route to the generic bounds.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "uncertainty/quantum.h"

namespace uncertainty {

struct BlochAngles {
  double theta = 0;  ///< [0, pi]
  double phi = 0;    ///< [0, 2 pi]

  /// Throws std::domain_error when out of range.
  void validate() const;
};

struct SpinExpectations {
  double s1 = 0;
  double s2 = 0;
  double s3 = 0;

  /// Throws std::domain_error unless every component lies in [-1, 1]
  /// (1e-12 round-off allowance).
  void validate() const;
  std::array<double, 3> as_array() const { return {s1, s2, s3}; }
};

/// Pauli matrix sigma_index, index in {1, 2, 3}.
Observable pauli(int index);
std::vector<Observable> pauli_triple();
/// True when obs is (sigma_1, sigma_2, sigma_3) in that order, entrywise
/// within 1e-12.
bool is_pauli_triple(std::span<const Observable> obs);

PureState bloch_pure_state(BlochAngles angles);
/// (sin theta cos phi, sin theta sin phi, cos theta).
SpinExpectations bloch_expectations(BlochAngles angles);
SpinExpectations spin_expectations(const PureState &psi);

/// [sum_{k=1,2} (1/8 prod_i (1 + (-1)^k |s_i|)^2 (1 - (-1)^k |s_i|))^(1/3)]^3
double closed_form_product_bound(const SpinExpectations &s);

/// Sorted u-vector of a +-1 observable with mean s: F = (1 +- s) / 2.
std::array<double, 2> spin_u_vector(double s);
/// Omega_12, Omega_13, Omega_23.
std::array<double, 3> omega_values(const SpinExpectations &s);

struct SpinProductBounds {
  double pro_hr = 0;      ///< |s1 s2 s3| / 8
  double pro_fd = 0;      ///< |s1 s2 s3| / (3 sqrt 3)
  double pro_closed = 0;  ///< closed_form_product_bound
};

struct SpinSumBounds {
  double sum_ours = 0;  ///< sum Omega^2 - (sum Omega)^2 / 4
  double sum_song = 0;  ///< Var(sum S)/3 + [sum Delta(S_i - S_j)]^2 / 9
  double sum_fd = 0;    ///< (|s1| + |s2| + |s3|) / sqrt 3
};

SpinProductBounds spin_product_bounds(const SpinExpectations &s);
SpinProductBounds spin_product_bounds(const PureState &psi);
SpinSumBounds spin_sum_bounds(const SpinExpectations &s);
SpinSumBounds spin_sum_bounds(const PureState &psi);

}  // namespace uncertainty
