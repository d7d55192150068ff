#include "uncertainty/expsim.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "uncertainty/spinhalf.h"

namespace uncertainty {

namespace {

// Sub-seed index of the bootstrap stream; measurement settings use 0..N+P.
constexpr std::uint64_t kBootstrapStream = 0xb00757a9ULL;

struct Setting {
  std::vector<double> eigenvalues;
  std::vector<double> probabilities;
};

struct SettingPlan {
  std::size_t n_obs = 0;
  bool pauli_triple = false;
  bool degenerate = false;
  bool has_commutator = false;
  // Order: observables, sum, pairwise differences, commutator.
  std::vector<Setting> settings;
};

SettingPlan plan_settings(std::span<const Observable> obs, const PureState &psi) {
  if (obs.size() < 2) {
    throw std::invalid_argument("empirical_bound_report: need at least two observables");
  }
  SettingPlan plan;
  plan.n_obs = obs.size();
  plan.pauli_triple = is_pauli_triple(obs);
  auto add = [&](const Observable &a) {
    plan.settings.push_back({a.spectrum().eigenvalues, transition_probabilities(a, psi)});
  };
  for (const auto &a : obs) {
    add(a);
    plan.degenerate = plan.degenerate || a.has_degenerate_spectrum();
  }
  add(sum_observable(obs));
  for (const auto &d : pair_difference_observables(obs)) {
    add(d);
  }
  if (obs.size() == 2) {
    plan.has_commutator = true;
    add(commutator_observable(obs[0], obs[1]));
  }
  return plan;
}

MeasurementRecord record_from_counts(const SettingPlan &plan, std::span<const CountVector> counts) {
  MeasurementRecord record;
  record.pauli_triple = plan.pauli_triple;
  record.degenerate_spectrum = plan.degenerate;
  std::size_t s = 0;
  for (; s < plan.n_obs; ++s) {
    record.observables.push_back(statistics_from_counts(counts[s], plan.settings[s].eigenvalues));
  }
  record.sum_variance = statistics_from_counts(counts[s], plan.settings[s].eigenvalues).variance;
  ++s;
  for (std::size_t p = 0; p < plan.n_obs * (plan.n_obs - 1) / 2; ++p, ++s) {
    record.difference_variances.push_back(statistics_from_counts(counts[s], plan.settings[s].eigenvalues).variance);
  }
  if (plan.has_commutator) {
    record.commutator_mean = statistics_from_counts(counts[s], plan.settings[s].eigenvalues).mean;
  }
  return record;
}

std::vector<double> frequencies(const CountVector &counts) {
  std::vector<double> out;
  out.reserve(counts.counts.size());
  for (auto c : counts.counts) {
    out.push_back(static_cast<double>(c) / static_cast<double>(counts.total));
  }
  return out;
}

/// Sample standard deviation with n - 1 denominator.
class SpreadAccumulator {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  double std_dev() const { return n_ > 1 ? std::sqrt(m2_ / static_cast<double>(n_ - 1)) : 0.0; }

 private:
  std::size_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

}  // namespace

void SimConfig::validate() const {
  if (shots < 1) {
    throw std::invalid_argument("SimConfig: shots must be at least 1");
  }
  if (bootstrap_resamples < 100) {
    throw std::invalid_argument("SimConfig: bootstrap_resamples must be at least 100");
  }
}

CountVector sample_multinomial(std::span<const double> probabilities, std::uint64_t shots, Engine &engine) {
  CountVector out;
  out.counts.assign(probabilities.size(), 0);
  out.total = shots;
  std::uint64_t remaining = shots;
  double remaining_mass = 1;
  for (std::size_t k = 0; k < probabilities.size() && remaining > 0; ++k) {
    if (k + 1 == probabilities.size()) {
      out.counts[k] = remaining;
      break;
    }
    const double p = remaining_mass > 0 ? std::clamp(probabilities[k] / remaining_mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<long long> binomial(static_cast<long long>(remaining), p);
    const auto drawn = static_cast<std::uint64_t>(binomial(engine));
    out.counts[k] = drawn;
    remaining -= drawn;
    remaining_mass -= probabilities[k];
  }
  return out;
}

CountVector simulate_projective_counts(const Observable &a, const PureState &psi, const SimConfig &cfg) {
  cfg.validate();
  const auto probabilities = transition_probabilities(a, psi);
  Engine engine = make_engine(cfg.seed);
  return sample_multinomial(probabilities, cfg.shots, engine);
}

MeasurementStatistics statistics_from_counts(const CountVector &counts, std::span<const double> eigenvalues) {
  if (counts.total == 0) {
    throw std::invalid_argument("empirical moments: zero total count");
  }
  if (counts.counts.size() != eigenvalues.size()) {
    throw std::invalid_argument("empirical moments: " + std::to_string(counts.counts.size()) + " counts for " +
                                std::to_string(eigenvalues.size()) + " eigenvalues");
  }
  MeasurementStatistics stats;
  stats.eigenvalues.assign(eigenvalues.begin(), eigenvalues.end());
  stats.probabilities = frequencies(counts);
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    stats.mean += stats.probabilities[k] * eigenvalues[k];
  }
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    const double d = eigenvalues[k] - stats.mean;
    stats.variance += stats.probabilities[k] * d * d;
  }
  return stats;
}

EmpiricalMoments empirical_moments(const CountVector &counts, std::span<const double> eigenvalues, Seed bootstrap_seed,
                                   std::size_t resamples) {
  const MeasurementStatistics point = statistics_from_counts(counts, eigenvalues);
  SpreadAccumulator mean_spread;
  SpreadAccumulator variance_spread;
  for (std::size_t b = 0; b < resamples; ++b) {
    Engine engine = make_engine(derive_seed(bootstrap_seed, b));
    const CountVector resampled = sample_multinomial(point.probabilities, counts.total, engine);
    const MeasurementStatistics stats = statistics_from_counts(resampled, eigenvalues);
    mean_spread.add(stats.mean);
    variance_spread.add(stats.variance);
  }
  return EmpiricalMoments{
      .mean = {point.mean, mean_spread.std_dev()},
      .variance = {point.variance, variance_spread.std_dev()},
      .probabilities = point.probabilities,
  };
}

EmpiricalBoundReport empirical_bound_report(std::span<const Observable> obs, const PureState &psi,
                                            const SimConfig &cfg) {
  cfg.validate();
  const SettingPlan plan = plan_settings(obs, psi);

  std::vector<CountVector> observed;
  observed.reserve(plan.settings.size());
  for (std::size_t s = 0; s < plan.settings.size(); ++s) {
    Engine engine = make_engine(derive_seed(cfg.seed, s));
    observed.push_back(sample_multinomial(plan.settings[s].probabilities, cfg.shots, engine));
  }

  EmpiricalBoundReport out;
  out.point = evaluate_bounds(record_from_counts(plan, observed));

  // Bootstrap: resample every setting from its observed frequencies.
  std::vector<std::vector<double>> observed_frequencies;
  for (const auto &c : observed) {
    observed_frequencies.push_back(frequencies(c));
  }
  const Seed bootstrap = derive_seed(cfg.seed, kBootstrapStream);
  SpreadAccumulator lhs_product;
  SpreadAccumulator lhs_sum;
  std::map<BoundId, SpreadAccumulator> spreads;
  std::vector<CountVector> resampled(plan.settings.size());
  for (std::size_t b = 0; b < cfg.bootstrap_resamples; ++b) {
    const Seed resample_seed = derive_seed(bootstrap, b);
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
      Engine engine = make_engine(derive_seed(resample_seed, s));
      resampled[s] = sample_multinomial(observed_frequencies[s], cfg.shots, engine);
    }
    const BoundReport report = evaluate_bounds(record_from_counts(plan, resampled));
    lhs_product.add(report.lhs_product);
    lhs_sum.add(report.lhs_sum);
    for (const auto &[id, value] : report.values) {
      spreads[id].add(value);
    }
  }

  out.lhs_product = {out.point.lhs_product, lhs_product.std_dev()};
  out.lhs_sum = {out.point.lhs_sum, lhs_sum.std_dev()};
  for (const auto &[id, value] : out.point.values) {
    out.bounds[id] = {value, spreads[id].std_dev()};
  }
  return out;
}

}  // namespace uncertainty
