// Monte Carlo stand-in for the single-photon experiment.
//
// Every observable is a measurement setting sampled with ideal multinomial
// projective statistics. Bounds are evaluated on the empirical moments and
// carry +-1 standard deviation error bars from a nonparametric bootstrap
// over the counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "uncertainty/bounds.h"
#include "uncertainty/qmath.h"
#include "uncertainty/quantum.h"

namespace uncertainty {

struct SimConfig {
  /// Counts per measurement setting; the default is roughly one second of
  /// coincidences at the reported ~2800 per second.
  std::uint64_t shots = 2800;
  Seed seed{};
  std::size_t bootstrap_resamples = 1000;

  /// Throws std::invalid_argument when shots < 1 or resamples < 100.
  void validate() const;
};

struct CountVector {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

struct EmpiricalEstimate {
  double value = 0;
  double std_error = 0;
};

struct EmpiricalMoments {
  EmpiricalEstimate mean;
  EmpiricalEstimate variance;
  std::vector<double> probabilities;
};

/// Multinomial(shots, probabilities) by sequential conditional binomials.
CountVector sample_multinomial(std::span<const double> probabilities, std::uint64_t shots, Engine &engine);

/// Samples `cfg.shots` projective outcomes of A on psi using `cfg.seed`.
CountVector simulate_projective_counts(const Observable &a, const PureState &psi, const SimConfig &cfg);

/// Frequencies, mean and variance of the outcome distribution behind
/// `counts`, with bootstrap standard errors. Throws std::invalid_argument on
/// a zero total or mismatched lengths.
EmpiricalMoments empirical_moments(const CountVector &counts, std::span<const double> eigenvalues,
                                   Seed bootstrap_seed = Seed{}, std::size_t resamples = 1000);

/// Moments of one count vector without error bars.
MeasurementStatistics statistics_from_counts(const CountVector &counts, std::span<const double> eigenvalues);

struct EmpiricalBoundReport {
  /// Point estimates: every bound evaluated on the observed counts.
  BoundReport point;
  EmpiricalEstimate lhs_product;
  EmpiricalEstimate lhs_sum;
  std::map<BoundId, EmpiricalEstimate> bounds;
};

/// Measures each observable plus the auxiliary settings some bounds need
/// (sum of all observables, pairwise differences, and i[A,B] for N = 2),
/// each with its own sub-seed of `cfg.seed`. Pure function of its inputs.
EmpiricalBoundReport empirical_bound_report(std::span<const Observable> obs, const PureState &psi,
                                            const SimConfig &cfg);

}  // namespace uncertainty
