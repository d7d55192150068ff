// Pure states, observables and the per-(observable, state) statistics that
// every bound is built from.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "uncertainty/qmath.h"

namespace uncertainty {

/// Unit-norm state vector. Construction throws std::invalid_argument when
/// the norm differs from 1 by more than 1e-12.
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  explicit PureState(ComplexVector amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  const ComplexVector &amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian matrix together with its eigendecomposition, computed once at
/// construction.
class Observable {
 public:
  explicit Observable(HermitianMatrix matrix);

  std::size_t dim() const { return matrix_.dim(); }
  const HermitianMatrix &matrix() const { return matrix_; }
  const SpectralData &spectrum() const { return spectrum_; }

  /// True when two eigenvalues lie within 1e-9 * max(1, spectral radius).
  /// Bounds built on such an observable depend on the eigenbasis the
  /// solver picked inside the degenerate subspace.
  bool has_degenerate_spectrum() const;

 private:
  HermitianMatrix matrix_;
  SpectralData spectrum_;
};

/// <psi|A|psi>.
double expectation(const Observable &a, const PureState &psi);

/// <A^2> - <A>^2 via matrix products. Round-off negatives above -1e-12 are
/// clamped to 0; anything lower throws std::logic_error.
double variance(const Observable &a, const PureState &psi);

/// |<psi|a_k>|^2 in spectrum order.
std::vector<double> transition_probabilities(const Observable &a, const PureState &psi);

/// Outcome statistics of one projective measurement setting: the spectrum,
/// the outcome probabilities, and the mean and variance of the outcome.
///
/// The analytic route fills these from the state; the simulated experiment
/// fills them from observed counts. Every bound formula reads only this.
struct MeasurementStatistics {
  std::vector<double> eigenvalues;
  std::vector<double> probabilities;
  double mean = 0;
  double variance = 0;
};

MeasurementStatistics measurement_statistics(const Observable &a, const PureState &psi);

/// |a_k - <A>| sqrt(F_k), sorted ascending. Sum of squares equals the variance.
struct UVector {
  std::vector<double> values;
};

/// (a_k - <A>) sqrt(F_k) with sign, sorted ascending.
struct SignedProjectionVector {
  std::vector<double> values;
};

UVector u_vector(const MeasurementStatistics &stats);
UVector u_vector(const Observable &a, const PureState &psi);
SignedProjectionVector signed_projection_vector(const MeasurementStatistics &stats);
SignedProjectionVector signed_projection_vector(const Observable &a, const PureState &psi);

/// Observable for sum_i c_i A_i, re-diagonalized. Throws on an empty term list
/// or mismatched dimensions.
Observable composite_observable(std::span<const std::pair<double, Observable>> terms);

}  // namespace uncertainty
