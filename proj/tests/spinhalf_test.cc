#include "uncertainty/spinhalf.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle/qubit_oracle.h"
#include "oracle/reference_values.h"
#include "uncertainty/bounds.h"

using namespace uncertainty;
namespace ref = uncertainty::reference;

namespace {

const double kPi = std::numbers::pi;
const PureState kNorth(ComplexVector{1, 0});

PureState bloch(double theta, double phi) { return bloch_pure_state({theta, phi}); }

template <typename F>
void for_each_grid_point(F &&f) {
  for (int i = 0; i <= 60; ++i) {
    for (int j = 0; j <= 60; ++j) {
      f(kPi * i / 60, 2 * kPi * j / 60);
    }
  }
}

}  // namespace

TEST(spinhalf, pauli_matrices) {
  EXPECT_EQ(pauli(3).matrix().matrix(), ComplexMatrix::diagonal({1, -1}));
  EXPECT_NEAR(pauli(1).spectrum().eigenvalues[0], -1, 1e-15);
  EXPECT_NEAR(pauli(1).spectrum().eigenvalues[1], 1, 1e-15);
  EXPECT_EQ(pauli(2).matrix().matrix() * pauli(2).matrix().matrix(), ComplexMatrix::identity(2));
  EXPECT_THROW(pauli(0), std::invalid_argument);
  EXPECT_THROW(pauli(4), std::invalid_argument);
  EXPECT_TRUE(is_pauli_triple(pauli_triple()));
  const std::vector<Observable> swapped = {pauli(2), pauli(1), pauli(3)};
  EXPECT_FALSE(is_pauli_triple(swapped));
}

TEST(spinhalf, bloch_expectations_examples) {
  const auto a = bloch_expectations({0, 0});
  EXPECT_EQ(a.as_array(), (std::array<double, 3>{0, 0, 1}));
  const auto b = bloch_expectations({kPi / 2, kPi / 2});
  EXPECT_NEAR(b.s1, 0, 1e-15);
  EXPECT_NEAR(b.s2, 1, 1e-15);
  EXPECT_NEAR(b.s3, 0, 1e-15);
  const auto c = bloch_expectations({kPi / 4, 0});
  EXPECT_NEAR(c.s1, 0.707106781186548, 1e-15);
  EXPECT_EQ(c.s2, 0.0);
  EXPECT_NEAR(c.s3, 0.707106781186548, 1e-15);
  EXPECT_THROW(bloch_expectations({-0.1, 0}), std::domain_error);
  EXPECT_THROW(bloch_expectations({0.1, 7}), std::domain_error);
}

TEST(spinhalf, expectations_match_state_route) {
  for_each_grid_point([](double theta, double phi) {
    const auto a = bloch_expectations({theta, phi});
    const auto b = spin_expectations(bloch(theta, phi));
    ASSERT_NEAR(a.s1, b.s1, 1e-14);
    ASSERT_NEAR(a.s2, b.s2, 1e-14);
    ASSERT_NEAR(a.s3, b.s3, 1e-14);
  });
  EXPECT_THROW(spin_expectations(PureState(ComplexVector{1, 0, 0})), std::invalid_argument);
  EXPECT_THROW((SpinExpectations{1.1, 0, 0}.validate()), std::domain_error);
  EXPECT_NO_THROW((SpinExpectations{1 + 1e-13, 0, 0}.validate()));
}

TEST(spinhalf, closed_form_examples) {
  EXPECT_NEAR(closed_form_product_bound({std::numbers::sqrt2 / 2, 0, std::numbers::sqrt2 / 2}), ref::kPi4Carlson,
              1e-12);
  EXPECT_EQ(closed_form_product_bound({1, 0, 0}), 0.0);
  EXPECT_NEAR(closed_form_product_bound({0, 0, 0}), 1, 1e-15);
}

TEST(spinhalf, product_bound_examples) {
  const auto p = spin_product_bounds(bloch(kPi / 4, kPi / 4));
  EXPECT_NEAR(p.pro_hr, ref::kPi4Pi4SpinProHr, 1e-12);
  EXPECT_NEAR(p.pro_fd, ref::kPi4Pi4SpinProFd, 1e-12);
  const auto north = spin_product_bounds(kNorth);
  EXPECT_EQ(north.pro_hr, 0.0);
  EXPECT_EQ(north.pro_fd, 0.0);
  EXPECT_EQ(north.pro_closed, 0.0);
  for (int n = 0; n <= 12; ++n) {
    const auto q = spin_product_bounds(bloch(kPi * n / 12, 0));
    EXPECT_EQ(q.pro_hr, 0.0);
    EXPECT_EQ(q.pro_fd, 0.0);
  }
}

TEST(spinhalf, sum_bound_examples) {
  const auto north = spin_sum_bounds(kNorth);
  EXPECT_NEAR(north.sum_ours, 2, 1e-12);
  EXPECT_NEAR(north.sum_song, ref::kNorthVarianceDecomposition, 1e-12);
  EXPECT_NEAR(north.sum_fd, 1 / std::numbers::sqrt3, 1e-15);
  const auto p = spin_sum_bounds(bloch(kPi / 4, 0));
  EXPECT_NEAR(p.sum_ours, ref::kPi4Additive, 1e-12);
  EXPECT_NEAR(p.sum_song, ref::kPi4VarianceDecomposition, 1e-12);
  EXPECT_NEAR(p.sum_fd, ref::kPi4SpinSumFd, 1e-12);
  EXPECT_GT(p.sum_song, p.sum_ours);
  EXPECT_NEAR(spin_sum_bounds(bloch(kPi / 2, 0)).sum_ours, 2, 1e-12);
}

TEST(spinhalf, spin_u_vector_matches_generic) {
  for (double t : {-1.0, -0.6, 0.0, 0.25, 0.9, 1.0}) {
    const auto u = spin_u_vector(t);
    const auto o = oracle::qubit_u(t);
    // Sorted generic u-vector of sigma_3 on a state with <sigma_3> = t.
    const double theta = std::acos(t);
    const auto g = u_vector(pauli(3), bloch(theta, 0)).values;
    EXPECT_NEAR(u[0] * u[0] + u[1] * u[1], 1 - t * t, 1e-14);
    std::array<double, 2> sorted = u;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_NEAR(sorted[0], o[0], 1e-14);
    EXPECT_NEAR(sorted[1], o[1], 1e-14);
    EXPECT_NEAR(sorted[0], g[0], 1e-12);
    EXPECT_NEAR(sorted[1], g[1], 1e-12);
  }
}

TEST(spinhalf, closed_forms_match_generic_on_grid) {
  const auto s = pauli_triple();
  double worst_product = 0, worst_sum = 0, worst_omega = 0;
  for_each_grid_point([&](double theta, double phi) {
    const auto psi = bloch(theta, phi);
    const auto e = bloch_expectations({theta, phi});
    worst_product = std::max(worst_product, std::abs(closed_form_product_bound(e) - carlson_product(s, psi)));
    worst_sum = std::max(worst_sum,
                         std::abs(spin_sum_bounds(e).sum_song - variance_decomposition_sum_bound(s, psi)));
    worst_sum = std::max(worst_sum, std::abs(spin_sum_bounds(e).sum_ours - additive_bound(s, psi)));
    const auto omega = omega_values(e);
    const auto lambda = lambda_set(s, psi);
    worst_omega = std::max({worst_omega, std::abs(omega[0] - lambda.at(0, 1)), std::abs(omega[1] - lambda.at(0, 2)),
                            std::abs(omega[2] - lambda.at(1, 2))});
  });
  EXPECT_LE(worst_product, 1e-12);
  EXPECT_LE(worst_sum, 1e-12);
  EXPECT_LE(worst_omega, 1e-12);
}

TEST(spinhalf, bounds_match_bloch_vector_oracle) {
  for_each_grid_point([](double theta, double phi) {
    const auto b = oracle::bloch_vector(theta, phi);
    const auto e = bloch_expectations({theta, phi});
    const auto p = spin_product_bounds(e);
    const auto q = spin_sum_bounds(e);
    ASSERT_NEAR(p.pro_hr, oracle::qubit_pro_hr(b), 1e-14);
    ASSERT_NEAR(p.pro_fd, oracle::qubit_pro_fd(b), 1e-14);
    ASSERT_NEAR(p.pro_closed, oracle::qubit_pro_closed(b), 1e-12);
    ASSERT_NEAR(q.sum_ours, oracle::qubit_sum_ours(b), 1e-12);
    ASSERT_NEAR(q.sum_song, oracle::qubit_sum_song(b), 1e-12);
    ASSERT_NEAR(q.sum_fd, oracle::qubit_sum_fd(b), 1e-14);
  });
}

TEST(spinhalf, bounds_are_valid_on_grid) {
  const auto s = pauli_triple();
  for_each_grid_point([&](double theta, double phi) {
    const auto psi = bloch(theta, phi);
    const double lhs_product = variance(s[0], psi) * variance(s[1], psi) * variance(s[2], psi);
    const double lhs_sum = variance(s[0], psi) + variance(s[1], psi) + variance(s[2], psi);
    ASSERT_NEAR(lhs_sum, 2, 1e-12);
    const auto p = spin_product_bounds(psi);
    const auto q = spin_sum_bounds(psi);
    for (double v : {p.pro_hr, p.pro_fd, p.pro_closed}) {
      ASSERT_LE(v, lhs_product + 1e-12);
    }
    for (double v : {q.sum_ours, q.sum_song, q.sum_fd}) {
      ASSERT_LE(v, lhs_sum + 1e-12);
    }
  });
}

TEST(spinhalf, triviality_contrast_on_meridian) {
  for (int n = 1; n <= 11; ++n) {
    if (n == 6) {
      continue;
    }
    const auto p = spin_product_bounds(bloch(kPi * n / 12, 0));
    EXPECT_EQ(p.pro_hr, 0.0) << n;
    EXPECT_EQ(p.pro_fd, 0.0) << n;
    EXPECT_GT(p.pro_closed, 1e-4) << n;
  }
}

TEST(spinhalf, requires_qubit_states) {
  const PureState qutrit(ComplexVector{1, 0, 0});
  EXPECT_THROW(spin_product_bounds(qutrit), std::invalid_argument);
  EXPECT_THROW(spin_sum_bounds(qutrit), std::invalid_argument);
}
