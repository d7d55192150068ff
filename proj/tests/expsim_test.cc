#include "uncertainty/expsim.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle/reference_values.h"
#include "uncertainty/spinhalf.h"

using namespace uncertainty;
namespace ref = uncertainty::reference;

namespace {

const double kPi = std::numbers::pi;
const PureState kNorth(ComplexVector{1, 0});
const std::vector<double> kPlusMinus = {-1, 1};

PureState bloch(double theta, double phi) { return PureState(bloch_state(theta, phi)); }

CountVector counts(std::uint64_t down, std::uint64_t up) { return {{down, up}, down + up}; }

}  // namespace

TEST(expsim, config_validation) {
  EXPECT_NO_THROW(SimConfig{}.validate());
  EXPECT_THROW((SimConfig{.shots = 0}.validate()), std::invalid_argument);
  EXPECT_THROW((SimConfig{.shots = 10, .seed = {}, .bootstrap_resamples = 99}.validate()), std::invalid_argument);
}

TEST(expsim, projective_counts_examples) {
  const auto z = simulate_projective_counts(pauli(3), kNorth, SimConfig{.shots = 1000});
  EXPECT_EQ(z.counts, (std::vector<std::uint64_t>{0, 1000}));
  EXPECT_EQ(z.total, 1000u);

  const SimConfig big{.shots = 1000000, .seed = Seed{3}};
  const auto x = simulate_projective_counts(pauli(1), kNorth, big);
  EXPECT_EQ(x.counts[0] + x.counts[1], x.total);
  EXPECT_NEAR(static_cast<double>(x.counts[1]) / 1e6, 0.5, 0.0025);

  EXPECT_EQ(simulate_projective_counts(pauli(1), bloch(1, 2), big).counts,
            simulate_projective_counts(pauli(1), bloch(1, 2), big).counts);
  EXPECT_THROW(simulate_projective_counts(pauli(1), PureState(ComplexVector{1, 0, 0}), big), std::invalid_argument);
}

TEST(expsim, multinomial_preserves_total_and_zero_categories) {
  Engine engine = make_engine(Seed{12});
  const std::vector<double> p = {0.2, 0, 0.5, 0.3};
  for (int t = 0; t < 100; ++t) {
    const auto c = sample_multinomial(p, 1234, engine);
    ASSERT_EQ(c.counts[0] + c.counts[1] + c.counts[2] + c.counts[3], 1234u);
    ASSERT_EQ(c.counts[1], 0u);
  }
}

TEST(expsim, empirical_moments_examples) {
  const auto a = empirical_moments(counts(0, 1000), kPlusMinus);
  EXPECT_EQ(a.mean.value, 1.0);
  EXPECT_EQ(a.variance.value, 0.0);
  EXPECT_EQ(a.mean.std_error, 0.0);
  const auto b = empirical_moments(counts(500, 500), kPlusMinus);
  EXPECT_EQ(b.mean.value, 0.0);
  EXPECT_EQ(b.variance.value, 1.0);
  const auto c = empirical_moments(counts(250, 750), kPlusMinus);
  EXPECT_DOUBLE_EQ(c.mean.value, 0.5);
  EXPECT_DOUBLE_EQ(c.variance.value, 0.75);
  EXPECT_EQ(c.probabilities, (std::vector<double>{0.25, 0.75}));
  // Binomial standard error of the mean: 2 sqrt(p (1 - p) / n).
  EXPECT_NEAR(c.mean.std_error, 2 * std::sqrt(0.25 * 0.75 / 1000), 0.1 * 2 * std::sqrt(0.25 * 0.75 / 1000));
  EXPECT_GE(c.variance.std_error, 0);

  EXPECT_THROW(empirical_moments(counts(0, 0), kPlusMinus), std::invalid_argument);
  EXPECT_THROW(empirical_moments(counts(1, 2), std::vector<double>{1, 2, 3}), std::invalid_argument);
}

TEST(expsim, bound_report_spot_values) {
  const auto s = pauli_triple();
  const SimConfig cfg{.shots = 1000000, .seed = Seed{2}};
  const auto r = empirical_bound_report(s, bloch(kPi / 4, 0), cfg);
  const auto carlson = r.bounds.at(BoundId::kCarlsonProduct);
  EXPECT_LE(std::abs(carlson.value - ref::kPi4Carlson), 5 * carlson.std_error);
  EXPECT_GT(carlson.std_error, 0);

  const auto north = empirical_bound_report(s, kNorth, cfg);
  const auto additive = north.bounds.at(BoundId::kAdditive);
  EXPECT_LE(std::abs(additive.value - 2), 5 * additive.std_error);
  // sigma_3 is deterministic at |0>, so the product lhs is exactly zero.
  EXPECT_EQ(north.lhs_product.value, 0.0);
  EXPECT_EQ(north.lhs_product.std_error, 0.0);
}

TEST(expsim, bound_report_is_deterministic) {
  const auto s = pauli_triple();
  const SimConfig cfg{.shots = 2800, .seed = Seed{5}, .bootstrap_resamples = 200};
  const auto a = empirical_bound_report(s, bloch(1, 2), cfg);
  const auto b = empirical_bound_report(s, bloch(1, 2), cfg);
  EXPECT_EQ(a.point.values, b.point.values);
  for (const auto &[id, est] : a.bounds) {
    EXPECT_EQ(est.value, b.bounds.at(id).value);
    EXPECT_EQ(est.std_error, b.bounds.at(id).std_error);
  }
  const auto c = empirical_bound_report(s, bloch(1, 2), SimConfig{.shots = 2800, .seed = Seed{6}, .bootstrap_resamples = 200});
  EXPECT_NE(a.point.values, c.point.values);
}

TEST(expsim, two_observable_report_covers_pair_bounds) {
  const std::vector<Observable> obs = {pauli(1), pauli(2)};
  const auto r = empirical_bound_report(obs, bloch(0.3, 0.4), SimConfig{.shots = 100000, .seed = Seed{1}});
  const auto exact = bound_report(obs, bloch(0.3, 0.4));
  for (BoundId id : {BoundId::kRobertson, BoundId::kMondalProduct, BoundId::kMondalSum, BoundId::kCarlsonProduct,
                     BoundId::kAdditive, BoundId::kVarianceDecomposition}) {
    ASSERT_TRUE(r.bounds.contains(id)) << bound_name(id);
    EXPECT_LE(std::abs(r.bounds.at(id).value - *exact.value(id)), 5 * r.bounds.at(id).std_error + 1e-12)
        << bound_name(id);
  }
}

TEST(expsim, converges_with_shots) {
  const auto s = pauli_triple();
  const auto psi = bloch(1.1, 0.7);
  const auto exact = bound_report(s, psi);
  double previous = 1e9;
  for (std::uint64_t shots : {10000ull, 100000ull, 1000000ull}) {
    double deviation = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto r = empirical_bound_report(s, psi, SimConfig{.shots = shots, .seed = Seed{seed}, .bootstrap_resamples = 100});
      for (const auto &[id, est] : r.bounds) {
        deviation += std::abs(est.value - *exact.value(id));
      }
    }
    EXPECT_LT(deviation, previous) << shots;
    previous = deviation;
  }
}

TEST(expsim, error_bars_scale_as_inverse_sqrt_shots) {
  const auto s = pauli_triple();
  const auto psi = bloch(kPi / 3, kPi / 5);
  double small = 0, large = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = empirical_bound_report(s, psi, SimConfig{.shots = 10000, .seed = Seed{seed}, .bootstrap_resamples = 200});
    const auto b = empirical_bound_report(s, psi, SimConfig{.shots = 40000, .seed = Seed{seed}, .bootstrap_resamples = 200});
    for (BoundId id : {BoundId::kCarlsonProduct, BoundId::kAdditive}) {
      small += a.bounds.at(id).std_error;
      large += b.bounds.at(id).std_error;
    }
  }
  EXPECT_NEAR(small / large, 2, 0.4);
}

double mean_margin(BoundId id, const PureState &psi) {
  const auto s = pauli_triple();
  double margin = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = empirical_bound_report(s, psi, SimConfig{.shots = 100000, .seed = Seed{seed}, .bootstrap_resamples = 100});
    margin += r.point.margin(id);
  }
  return margin / 100;
}

TEST(expsim, ordering_preserved_in_expectation) {
  const auto s = pauli_triple();
  for (int n = 1; n <= 11; ++n) {
    if (n == 6) {
      continue;
    }
    const auto psi = bloch(kPi * n / 12, 0);
    double lhs_product = 0, lhs_sum = 0;
    std::map<BoundId, double> bound_means;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto r = empirical_bound_report(s, psi, SimConfig{.shots = 100000, .seed = Seed{seed}, .bootstrap_resamples = 100});
      lhs_product += r.point.lhs_product;
      lhs_sum += r.point.lhs_sum;
      for (const auto &[id, value] : r.point.values) {
        bound_means[id] += value;
      }
    }
    for (const auto &[id, total] : bound_means) {
      const double lhs = bound_kind(id) == BoundKind::kProduct ? lhs_product : lhs_sum;
      EXPECT_GE(lhs / 100, total / 100 - 1e-12) << "n=" << n << " " << bound_name(id);
    }
  }
}

// At an eigenstate of one S_i the measured lhs_product is exactly 0, while
// |s1 s2 s3| built from noisy means is positive: those two bounds flip on
// average. Every other bound keeps its ordering there.
TEST(expsim, eigenstate_ordering) {
  for (int n : {0, 6, 12}) {
    const auto psi = bloch(kPi * n / 12, 0);
    for (BoundId id : all_bounds()) {
      if (!bound_report(pauli_triple(), psi).applicable(id)) {
        continue;
      }
      const double margin = mean_margin(id, psi);
      if (id == BoundId::kSpinProHr || id == BoundId::kSpinProFd) {
        EXPECT_LT(margin, 0) << "n=" << n << " " << bound_name(id);
      } else {
        EXPECT_GE(margin, -1e-12) << "n=" << n << " " << bound_name(id);
      }
    }
  }
}
