#include "uncertainty/quantum.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uncertainty {

namespace {

constexpr double kVarianceClamp = 1e-12;

void require_match(const Observable &a, const PureState &psi) {
  if (a.dim() != psi.dim()) {
    throw std::invalid_argument("observable of dim " + std::to_string(a.dim()) + " applied to state of dim " +
                                std::to_string(psi.dim()));
  }
}

double clamp_variance(double raw) {
  if (raw >= 0) {
    return raw;
  }
  if (raw > -kVarianceClamp) {
    return 0;
  }
  throw std::logic_error("variance: negative value " + std::to_string(raw) + " beyond round-off");
}

template <typename Transform>
std::vector<double> sorted_projections(const MeasurementStatistics &stats, Transform transform) {
  std::vector<double> out(stats.eigenvalues.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = transform((stats.eigenvalues[k] - stats.mean) * std::sqrt(stats.probabilities[k]));
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) {
    throw std::invalid_argument("PureState: empty amplitude vector");
  }
  const double n = norm(amplitudes_);
  if (!(std::abs(n - 1) <= kNormTolerance)) {
    throw std::invalid_argument("PureState: norm " + std::to_string(n) + " is not 1");
  }
}

Observable::Observable(HermitianMatrix matrix)
    : matrix_(std::move(matrix)), spectrum_(hermitian_eigendecompose(matrix_)) {}

bool Observable::has_degenerate_spectrum() const {
  const auto &values = spectrum_.eigenvalues;
  if (values.size() < 2) {
    return false;
  }
  const double scale = std::max({1.0, std::abs(values.front()), std::abs(values.back())});
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (values[k + 1] - values[k] <= 1e-9 * scale) {
      return true;
    }
  }
  return false;
}

double expectation(const Observable &a, const PureState &psi) {
  require_match(a, psi);
  const Complex value = inner_product(psi.amplitudes(), a.matrix().matrix() * psi.amplitudes());
  const double scale = std::max(1.0, a.matrix().matrix().frobenius_norm());
  if (std::abs(value.imag()) > 1e-12 * scale) {
    throw std::logic_error("expectation: imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

double variance(const Observable &a, const PureState &psi) {
  require_match(a, psi);
  // ||(A - <A>) psi||^2 has no cancellation near eigenstates, unlike
  // <A^2> - <A>^2.
  ComplexVector deviation = a.matrix().matrix() * psi.amplitudes();
  const double mean = inner_product(psi.amplitudes(), deviation).real();
  for (std::size_t k = 0; k < deviation.size(); ++k) {
    deviation[k] -= mean * psi.amplitudes()[k];
  }
  return clamp_variance(std::pow(norm(deviation), 2));
}

std::vector<double> transition_probabilities(const Observable &a, const PureState &psi) {
  require_match(a, psi);
  std::vector<double> out;
  out.reserve(a.dim());
  for (const auto &eigenvector : a.spectrum().eigenvectors) {
    out.push_back(std::norm(inner_product(eigenvector, psi.amplitudes())));
  }
  return out;
}

MeasurementStatistics measurement_statistics(const Observable &a, const PureState &psi) {
  return MeasurementStatistics{
      .eigenvalues = a.spectrum().eigenvalues,
      .probabilities = transition_probabilities(a, psi),
      .mean = expectation(a, psi),
      .variance = variance(a, psi),
  };
}

UVector u_vector(const MeasurementStatistics &stats) {
  return UVector{sorted_projections(stats, [](double x) { return std::abs(x); })};
}

UVector u_vector(const Observable &a, const PureState &psi) { return u_vector(measurement_statistics(a, psi)); }

SignedProjectionVector signed_projection_vector(const MeasurementStatistics &stats) {
  return SignedProjectionVector{sorted_projections(stats, [](double x) { return x; })};
}

SignedProjectionVector signed_projection_vector(const Observable &a, const PureState &psi) {
  return signed_projection_vector(measurement_statistics(a, psi));
}

Observable composite_observable(std::span<const std::pair<double, Observable>> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("composite_observable: empty term list");
  }
  const std::size_t dim = terms.front().second.dim();
  ComplexMatrix sum(dim);
  for (const auto &[coefficient, observable] : terms) {
    if (observable.dim() != dim) {
      throw std::invalid_argument("composite_observable: dimension mismatch");
    }
    sum = sum + Complex(coefficient) * observable.matrix().matrix();
  }
  return Observable(HermitianMatrix(sum));
}

}  // namespace uncertainty
