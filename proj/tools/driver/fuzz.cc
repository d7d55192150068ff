#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "driver/driver.h"
#include "driver/parallel.h"

namespace uncertainty::driver {

namespace {

constexpr double kValiditySlack = 1e-9;
constexpr double kChainSlack = 1e-12;
constexpr double kInvarianceTolerance = 1e-12;
constexpr int kRearrangementPermutations = 20;

/// One observation of a named check within a trial.
struct Observation {
  std::string check;
  double value;  // margin (>= -slack passes) or deviation (<= tol passes)
  bool violated;
};

double relative_deviation(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

template <typename T>
T pick(const std::vector<T> &options, Engine &engine) {
  std::uniform_int_distribution<std::size_t> index(0, options.size() - 1);
  return options[index(engine)];
}

std::vector<Observation> run_trial(const FuzzConfig &cfg, std::size_t trial) {
  const Seed trial_seed = derive_seed(cfg.seed, trial);
  Engine engine = make_engine(trial_seed);
  const std::size_t dim = pick(cfg.dims, engine);
  const std::size_t n = pick(cfg.n_obs, engine);

  std::vector<Observable> obs;
  for (std::size_t i = 0; i < n; ++i) {
    obs.emplace_back(random_hermitian(derive_seed(trial_seed, i + 1), dim));
  }
  const PureState psi(random_pure_state(derive_seed(trial_seed, 0), dim));
  const BoundReport report = bound_report(obs, psi);

  std::vector<Observation> out;
  for (const auto &[id, value] : report.values) {
    const double lhs = report.lhs(id);
    out.push_back({"validity:" + std::string(bound_name(id)), lhs - value,
                   value > lhs + kValiditySlack * std::max(1.0, lhs)});
  }

  std::vector<UVector> u;
  for (const auto &a : obs) {
    u.push_back(u_vector(a, psi));
  }
  const LambdaSet lambda = lambda_set(u);
  const double additive = report.value(BoundId::kAdditive).value();

  if (n == 2) {
    const double carlson_gap = report.value(BoundId::kCarlsonProduct).value() -
                               report.value(BoundId::kMondalProduct).value();
    out.push_back({"chain:carlson_product>=mondal_product", carlson_gap, carlson_gap < -kChainSlack});
    const double sum_gap = additive - report.value(BoundId::kMondalSum).value();
    out.push_back({"chain:additive>=mondal_sum", sum_gap, sum_gap < -kChainSlack});

    // Rank pairing maximizes sum_k u1k u2k over reorderings of u2.
    auto dot = [&](const std::vector<double> &x) {
      return std::inner_product(u[0].values.begin(), u[0].values.end(), x.begin(), 0.0);
    };
    const double sorted = dot(u[1].values);
    std::vector<double> shuffled = u[1].values;
    for (int p = 0; p < kRearrangementPermutations; ++p) {
      std::shuffle(shuffled.begin(), shuffled.end(), engine);
      const double gap = sorted - dot(shuffled);
      out.push_back({"rearrangement:sorted_pairing_maximal", gap, gap < -kChainSlack});
    }
  } else {
    const double gap = additive - simple_sum_bound(lambda);
    out.push_back({"chain:additive>=simple_sum", gap, gap < -kChainSlack});
  }

  // Reordered observable list.
  std::vector<Observable> reordered = obs;
  std::shuffle(reordered.begin(), reordered.end(), engine);
  for (BoundId id : {BoundId::kCarlsonProduct, BoundId::kAdditive}) {
    const double original = report.value(id).value();
    const double permuted = id == BoundId::kCarlsonProduct ? carlson_product(reordered, psi)
                                                            : additive_bound(reordered, psi);
    const double dev = relative_deviation(original, permuted);
    out.push_back({"permutation_invariance:" + std::string(bound_name(id)), dev, dev > kInvarianceTolerance});
  }

  // A_i -> A_i + c_i I.
  std::normal_distribution<double> shift(0.0, 1.0);
  std::vector<Observable> shifted;
  for (const auto &a : obs) {
    const double c = shift(engine);
    shifted.emplace_back(HermitianMatrix(a.matrix().matrix() + Complex(c) * ComplexMatrix::identity(dim)));
  }
  const BoundReport shifted_report = bound_report(shifted, psi);
  for (const auto &[id, value] : report.values) {
    const double dev = relative_deviation(value, shifted_report.value(id).value());
    out.push_back({"shift_invariance:" + std::string(bound_name(id)), dev, dev > kInvarianceTolerance});
  }
  return out;
}

bool is_deviation_check(const std::string &name) { return name.find("invariance") != std::string::npos; }

template <typename T>
std::string join(const std::vector<T> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out;
}

}  // namespace

void FuzzConfig::validate() const {
  if (trials == 0) {
    throw ConfigError("fuzz: trials must be positive");
  }
  if (dims.empty() || n_obs.empty()) {
    throw ConfigError("fuzz: dims and n_obs must be non-empty");
  }
  for (auto d : dims) {
    if (d < 2 || d > 6) {
      throw ConfigError("fuzz: dims must lie in [2, 6]");
    }
  }
  for (auto n : n_obs) {
    if (n < 2 || n > 4) {
      throw ConfigError("fuzz: n_obs must lie in [2, 4]");
    }
  }
}

std::size_t FuzzReport::total_violations() const {
  std::size_t total = 0;
  for (const auto &[name, summary] : checks) {
    total += summary.violations;
  }
  return total;
}

std::string FuzzReport::render() const {
  std::ostringstream out;
  out << "# uncertainty_cli " << kToolVersion << " fuzz\n";
  out << "seed " << config.seed.value << "\n";
  out << "trials " << config.trials << "\n";
  out << "dims " << join(config.dims) << "\n";
  out << "n_obs " << join(config.n_obs) << "\n";
  out << "tolerances validity_relative " << format_double(kValiditySlack) << " chain_absolute "
      << format_double(kChainSlack) << " invariance_relative " << format_double(kInvarianceTolerance) << "\n";
  out << "check,evaluated,violations,worst\n";
  for (const auto &[name, summary] : checks) {
    out << name << "," << summary.evaluated << "," << summary.violations << "," << format_double(summary.worst)
        << "\n";
  }
  out << "total_violations " << total_violations() << "\n";
  return out.str();
}

FuzzReport fuzz(const FuzzConfig &cfg) {
  cfg.validate();
  std::vector<std::vector<Observation>> results(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) { results[t] = run_trial(cfg, t); });

  FuzzReport report{cfg, {}};
  for (const auto &trial : results) {
    for (const auto &obs : trial) {
      auto [it, inserted] = report.checks.try_emplace(obs.check);
      CheckSummary &summary = it->second;
      if (inserted) {
        summary.worst = obs.value;
      } else if (is_deviation_check(obs.check)) {
        summary.worst = std::max(summary.worst, obs.value);
      } else {
        summary.worst = std::min(summary.worst, obs.value);
      }
      ++summary.evaluated;
      summary.violations += obs.violated ? 1 : 0;
    }
  }
  return report;
}

}  // namespace uncertainty::driver
