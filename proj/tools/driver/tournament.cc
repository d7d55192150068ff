#include <algorithm>
#include <numbers>
#include <sstream>

#include "driver/driver.h"
#include "driver/parallel.h"

namespace uncertainty::driver {

namespace {

constexpr double kTieTolerance = 1e-12;

BoundId contender_for(const ObservableSet &set, BoundKind kind) {
  if (kind == BoundKind::kSum) {
    return BoundId::kAdditive;
  }
  return set.is_pauli() ? BoundId::kSpinProClosed : BoundId::kCarlsonProduct;
}

}  // namespace

std::vector<BoundId> tournament_candidates(const ObservableSet &set, BoundKind kind) {
  if (set.is_pauli()) {
    if (kind == BoundKind::kProduct) {
      return {BoundId::kSpinProClosed, BoundId::kSpinProHr, BoundId::kSpinProFd};
    }
    return {BoundId::kAdditive, BoundId::kSpinSumSong, BoundId::kSpinSumFd};
  }
  const bool pair = set.observables.size() == 2;
  if (kind == BoundKind::kProduct) {
    if (pair) {
      return {BoundId::kCarlsonProduct, BoundId::kRobertson, BoundId::kMondalProduct};
    }
    return {BoundId::kCarlsonProduct};
  }
  if (pair) {
    return {BoundId::kAdditive, BoundId::kVarianceDecomposition, BoundId::kMondalSum};
  }
  return {BoundId::kAdditive, BoundId::kVarianceDecomposition};
}

void TournamentConfig::validate() const {
  if (set.observables.size() < 2) {
    throw ConfigError("tournament: observable set needs at least two observables");
  }
  if (grid) {
    ScanConfig probe;
    probe.set = set;
    probe.theta = grid->first;
    probe.phi = grid->second;
    probe.validate();
  } else if (random_states == 0) {
    throw ConfigError("tournament: give a state grid or a positive random state count");
  } else if (set.dim() > kMaxDim) {
    throw ConfigError("tournament: random states support dimensions up to 16");
  }
}

TournamentResult tournament(const TournamentConfig &cfg) {
  cfg.validate();
  std::vector<PureState> states;
  TournamentResult result;
  if (cfg.grid) {
    for (double theta : cfg.grid->first.points()) {
      for (double phi : cfg.grid->second.points()) {
        states.push_back(grid_state(theta, phi, cfg.set.dim()));
        result.state_labels.push_back("theta=" + format_double(theta) + " phi=" + format_double(phi));
      }
    }
  } else {
    for (std::size_t i = 0; i < cfg.random_states; ++i) {
      states.emplace_back(random_pure_state(derive_seed(cfg.seed, i), cfg.set.dim()));
      result.state_labels.push_back("random#" + std::to_string(i));
    }
  }

  std::vector<BoundReport> reports(states.size());
  parallel_for(states.size(), cfg.threads,
               [&](std::size_t i) { reports[i] = bound_report(cfg.set.observables, states[i]); });

  std::vector<BoundKind> kinds;
  if (cfg.mode != ScanMode::kSum) {
    kinds.push_back(BoundKind::kProduct);
  }
  if (cfg.mode != ScanMode::kProduct) {
    kinds.push_back(BoundKind::kSum);
  }
  for (BoundKind kind : kinds) {
    TournamentCategory category{
        .kind = kind,
        .candidates = tournament_candidates(cfg.set, kind),
        .contender = contender_for(cfg.set, kind),
        .win_fraction = {},
        .winners = {},
        .losses = {},
    };
    std::map<BoundId, std::size_t> wins;
    for (std::size_t s = 0; s < reports.size(); ++s) {
      const BoundReport &report = reports[s];
      double best = report.value(category.candidates.front()).value();
      for (BoundId id : category.candidates) {
        best = std::max(best, report.value(id).value());
      }
      std::optional<BoundId> first;
      for (BoundId id : category.candidates) {
        if (report.value(id).value() >= best - kTieTolerance) {
          ++wins[id];
          first = first.value_or(id);
        }
      }
      category.winners.push_back(*first);
      if (report.value(category.contender).value() < best - kTieTolerance) {
        category.losses.push_back(s);
      }
    }
    for (BoundId id : category.candidates) {
      category.win_fraction[id] = static_cast<double>(wins[id]) / static_cast<double>(reports.size());
    }
    result.categories.push_back(std::move(category));
  }
  return result;
}

std::string TournamentResult::render() const {
  std::ostringstream out;
  out << "# uncertainty_cli " << kToolVersion << " tournament over " << state_labels.size() << " states\n";
  for (const auto &category : categories) {
    const char *label = category.kind == BoundKind::kProduct ? "product" : "sum";
    out << "\n[" << label << "] contender " << bound_name(category.contender) << "\n";
    out << "bound,win_fraction\n";
    for (BoundId id : category.candidates) {
      out << bound_name(id) << "," << format_double(category.win_fraction.at(id)) << "\n";
    }
    out << "contender_losses " << category.losses.size() << "\n";
    for (std::size_t s : category.losses) {
      out << "  " << state_labels[s] << " winner " << bound_name(category.winners[s]) << "\n";
    }
  }
  return out.str();
}

}  // namespace uncertainty::driver
