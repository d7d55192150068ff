#include "uncertainty/spinhalf.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uncertainty {

namespace {

constexpr double kExpectationSlack = 1e-12;
constexpr double kPurityRoundOff = 1e-12;

double clamp_unit(double s) { return std::min(std::abs(s), 1.0); }

ComplexMatrix pauli_matrix(int index) {
  const Complex i(0, 1);
  switch (index) {
    case 1:
      return ComplexMatrix(2, {0, 1, 1, 0});
    case 2:
      return ComplexMatrix(2, {0, -i, i, 0});
    case 3:
      return ComplexMatrix(2, {1, 0, 0, -1});
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3, got " + std::to_string(index));
  }
}

}  // namespace

void BlochAngles::validate() const {
  if (!(theta >= 0 && theta <= std::numbers::pi)) {
    throw std::domain_error("BlochAngles: theta must lie in [0, pi]");
  }
  if (!(phi >= 0 && phi <= 2 * std::numbers::pi)) {
    throw std::domain_error("BlochAngles: phi must lie in [0, 2 pi]");
  }
}

void SpinExpectations::validate() const {
  for (double s : as_array()) {
    if (!(std::abs(s) <= 1 + kExpectationSlack)) {
      throw std::domain_error("SpinExpectations: component outside [-1, 1]");
    }
  }
}

Observable pauli(int index) { return Observable(HermitianMatrix(pauli_matrix(index))); }

std::vector<Observable> pauli_triple() { return {pauli(1), pauli(2), pauli(3)}; }

bool is_pauli_triple(std::span<const Observable> obs) {
  if (obs.size() != 3) {
    return false;
  }
  for (int k = 0; k < 3; ++k) {
    if (obs[k].dim() != 2) {
      return false;
    }
    const ComplexMatrix expected = pauli_matrix(k + 1);
    const auto &actual = obs[k].matrix().matrix();
    for (std::size_t e = 0; e < 4; ++e) {
      if (std::abs(actual.entries()[e] - expected.entries()[e]) > 1e-12) {
        return false;
      }
    }
  }
  return true;
}

PureState bloch_pure_state(BlochAngles angles) {
  angles.validate();
  return PureState(bloch_state(angles.theta, angles.phi));
}

SpinExpectations bloch_expectations(BlochAngles angles) {
  angles.validate();
  const double st = std::sin(angles.theta);
  return {st * std::cos(angles.phi), st * std::sin(angles.phi), std::cos(angles.theta)};
}

SpinExpectations spin_expectations(const PureState &psi) {
  if (psi.dim() != 2) {
    throw std::invalid_argument("spin-1/2 bounds need a qubit state, got dim " + std::to_string(psi.dim()));
  }
  return {expectation(pauli(1), psi), expectation(pauli(2), psi), expectation(pauli(3), psi)};
}

double closed_form_product_bound(const SpinExpectations &s) {
  s.validate();
  double sum = 0;
  for (int sign : {-1, +1}) {
    double product = 1.0 / 8;
    for (double component : s.as_array()) {
      const double t = clamp_unit(component);
      product *= (1 + sign * t) * (1 + sign * t) * (1 - sign * t);
    }
    sum += std::cbrt(product);
  }
  return sum * sum * sum;
}

std::array<double, 2> spin_u_vector(double s) {
  const double t = clamp_unit(s);
  // With F = (1 +- t) / 2 the outcome nearer the mean carries the smaller term.
  return {(1 - t) * std::sqrt((1 + t) / 2), (1 + t) * std::sqrt((1 - t) / 2)};
}

std::array<double, 3> omega_values(const SpinExpectations &s) {
  s.validate();
  const std::array u = {spin_u_vector(s.s1), spin_u_vector(s.s2), spin_u_vector(s.s3)};
  auto omega = [&](int i, int j) { return std::hypot(u[i][0] + u[j][0], u[i][1] + u[j][1]); };
  return {omega(0, 1), omega(0, 2), omega(1, 2)};
}

SpinProductBounds spin_product_bounds(const SpinExpectations &s) {
  s.validate();
  const double triple = std::abs(s.s1 * s.s2 * s.s3);
  return {
      .pro_hr = triple / 8,
      .pro_fd = triple / (3 * std::numbers::sqrt3),
      .pro_closed = closed_form_product_bound(s),
  };
}

SpinProductBounds spin_product_bounds(const PureState &psi) { return spin_product_bounds(spin_expectations(psi)); }

SpinSumBounds spin_sum_bounds(const SpinExpectations &s) {
  s.validate();
  const auto omega = omega_values(s);
  double omega_sum = 0;
  double omega_squares = 0;
  for (double o : omega) {
    omega_sum += o;
    omega_squares += o * o;
  }

  // Var(sum c_i S_i) = |c|^2 - (c . s)^2 for Pauli matrices.
  const double total = s.s1 + s.s2 + s.s3;
  const double sum_variance = std::max(0.0, 3 - total * total);
  // Var(S_i - S_j) = 2 - (s_i - s_j)^2, rewritten as
  // (s_i + s_j)^2 + 2 s_k^2 + 2 (1 - |s|^2) so it stays accurate where it
  // vanishes. A purity defect below round-off counts as a pure state.
  double defect = 1 - (s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
  if (std::abs(defect) <= kPurityRoundOff) {
    defect = 0;
  }
  auto difference_deviation = [defect](double a, double b, double other) {
    return std::sqrt(std::max(0.0, (a + b) * (a + b) + 2 * other * other + 2 * defect));
  };
  const double deviations = difference_deviation(s.s1, s.s2, s.s3) + difference_deviation(s.s1, s.s3, s.s2) +
                            difference_deviation(s.s2, s.s3, s.s1);

  return {
      .sum_ours = omega_squares - omega_sum * omega_sum / 4,
      .sum_song = sum_variance / 3 + deviations * deviations / 9,
      .sum_fd = (std::abs(s.s1) + std::abs(s.s2) + std::abs(s.s3)) / std::numbers::sqrt3,
  };
}

SpinSumBounds spin_sum_bounds(const PureState &psi) { return spin_sum_bounds(spin_expectations(psi)); }

}  // namespace uncertainty
