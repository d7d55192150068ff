#include <numbers>
#include <sstream>

#include "driver/driver.h"
#include "driver/parallel.h"

namespace uncertainty::driver {

namespace {

constexpr std::string_view kLhsProduct = "lhs_product";
constexpr std::string_view kLhsSum = "lhs_sum";

bool bound_applies(const ObservableSet &set, BoundId id) {
  switch (id) {
    case BoundId::kRobertson:
    case BoundId::kMondalProduct:
    case BoundId::kMondalSum:
      return set.observables.size() == 2;
    case BoundId::kSpinProHr:
    case BoundId::kSpinProFd:
    case BoundId::kSpinProClosed:
    case BoundId::kSpinSumSong:
    case BoundId::kSpinSumFd:
      return set.is_pauli();
    default:
      return true;
  }
}

/// Value of a named analytic column, or nullopt when inapplicable.
std::optional<double> column_value(const BoundReport &report, std::string_view column) {
  if (column == kLhsProduct) {
    return report.lhs_product;
  }
  if (column == kLhsSum) {
    return report.lhs_sum;
  }
  return report.value(*bound_from_name(column));
}

std::optional<EmpiricalEstimate> column_estimate(const EmpiricalBoundReport &report, std::string_view column) {
  if (column == kLhsProduct) {
    return report.lhs_product;
  }
  if (column == kLhsSum) {
    return report.lhs_sum;
  }
  auto it = report.bounds.find(*bound_from_name(column));
  if (it == report.bounds.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<std::string> panel_columns(const ObservableSet &set, BoundKind kind) {
  std::vector<std::string> out;
  for (const auto &column : populated_columns(set)) {
    if (column == kLhsProduct || column == kLhsSum) {
      if ((column == kLhsProduct) == (kind == BoundKind::kProduct)) {
        out.push_back(column);
      }
    } else if (bound_kind(*bound_from_name(column)) == kind) {
      out.push_back(column);
    }
  }
  return out;
}

std::string plot_script(const ScanConfig &cfg, std::string_view csv_filename) {
  const bool surface = cfg.theta.count > 1 && cfg.phi.count > 1;
  const bool along_phi = !surface && cfg.theta.count == 1 && cfg.phi.count > 1;
  const std::string x_column = along_phi ? "phi" : "theta";

  std::ostringstream out;
  out << "# gnuplot script generated by uncertainty_cli " << kToolVersion << "\n";
  out << "set datafile separator ','\n";
  out << "set datafile commentschars '#'\n";
  out << "set key autotitle columnhead\n";
  out << "data = '" << csv_filename << "'\n";
  out << "set terminal pngcairo size 900,650\n";

  std::vector<BoundKind> kinds;
  if (cfg.mode != ScanMode::kSum) {
    kinds.push_back(BoundKind::kProduct);
  }
  if (cfg.mode != ScanMode::kProduct) {
    kinds.push_back(BoundKind::kSum);
  }
  const std::string stem(csv_filename.substr(0, csv_filename.rfind('.')));
  for (BoundKind kind : kinds) {
    const char *label = kind == BoundKind::kProduct ? "product" : "sum";
    out << "\nset output '" << stem << "_" << label << ".png'\n";
    out << "set title 'Variance " << label << " and its lower bounds'\n";
    const auto columns = panel_columns(cfg.set, kind);
    if (surface) {
      out << "set xlabel 'theta'\nset ylabel 'phi'\n";
      out << "set dgrid3d " << cfg.theta.count << "," << cfg.phi.count << "\n";
      out << "splot ";
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? ", \\\n      " : "") << "data using 'theta':'phi':'" << columns[c] << "' with lines";
      }
      out << "\nunset dgrid3d\n";
      continue;
    }
    out << "set xlabel '" << x_column << "'\n";
    out << "plot ";
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? ", \\\n     " : "") << "data using '" << x_column << "':'" << columns[c] << "' with lines";
    }
    if (cfg.simulation) {
      // Measured lhs and the new bound with +-1 sigma bars.
      const std::string contender = kind == BoundKind::kProduct ? "carlson_product" : "additive";
      for (const std::string &column : {columns.front(), contender}) {
        out << ", \\\n     data using '" << x_column << "':'" << column << "_emp':'" << column
            << "_err' with yerrorbars title '" << column << " (simulated)'";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::vector<std::string> analytic_columns() {
  return {"theta",
          "phi",
          std::string(kLhsProduct),
          "robertson",
          "mondal_product",
          "carlson_product",
          "spin_pro_hr",
          "spin_pro_fd",
          "spin_pro_closed",
          std::string(kLhsSum),
          "mondal_sum",
          "additive",
          "variance_decomposition",
          "spin_sum_song",
          "spin_sum_fd"};
}

std::vector<std::string> populated_columns(const ObservableSet &set) {
  std::vector<std::string> out;
  for (const auto &column : analytic_columns()) {
    if (column == "theta" || column == "phi") {
      continue;
    }
    if (column == kLhsProduct || column == kLhsSum || bound_applies(set, *bound_from_name(column))) {
      out.push_back(column);
    }
  }
  return out;
}

std::vector<std::string> csv_columns(const ObservableSet &set, bool simulation) {
  auto out = analytic_columns();
  if (simulation) {
    for (const auto &column : populated_columns(set)) {
      out.push_back(column + "_emp");
      out.push_back(column + "_err");
    }
  }
  return out;
}

void ScanConfig::validate() const {
  if (set.observables.size() < 2) {
    throw ConfigError("observable set needs at least two observables");
  }
  if (theta.count < 1 || phi.count < 1) {
    throw ConfigError("grid counts must be at least 1");
  }
  for (double t : theta.points()) {
    if (!(t >= 0 && t <= std::numbers::pi)) {
      throw ConfigError("theta grid must lie within [0, pi]");
    }
  }
  for (double p : phi.points()) {
    if (!(p >= 0 && p <= 2 * std::numbers::pi)) {
      throw ConfigError("phi grid must lie within [0, 2 pi]");
    }
  }
  if (simulation) {
    try {
      simulation->validate();
    } catch (const std::invalid_argument &e) {
      throw ConfigError(e.what());
    }
  }
}

ScanOutput scan(const ScanConfig &cfg, std::string_view csv_filename) {
  cfg.validate();
  const auto thetas = cfg.theta.points();
  const auto phis = cfg.phi.points();
  const std::size_t rows = thetas.size() * phis.size();
  const auto analytic = analytic_columns();
  const auto populated = populated_columns(cfg.set);

  std::vector<std::string> lines(rows);
  parallel_for(rows, cfg.threads, [&](std::size_t r) {
    const double theta = thetas[r / phis.size()];
    const double phi = phis[r % phis.size()];
    const PureState psi = grid_state(theta, phi, cfg.set.dim());
    const BoundReport report = bound_report(cfg.set.observables, psi);

    std::string line = format_double(theta) + "," + format_double(phi);
    for (std::size_t c = 2; c < analytic.size(); ++c) {
      line += ',';
      if (auto v = column_value(report, analytic[c])) {
        line += format_double(*v);
      }
    }
    if (cfg.simulation) {
      SimConfig sim = *cfg.simulation;
      sim.seed = derive_seed(cfg.simulation->seed, r);
      const EmpiricalBoundReport empirical = empirical_bound_report(cfg.set.observables, psi, sim);
      for (const auto &column : populated) {
        line += ',';
        if (auto e = column_estimate(empirical, column)) {
          line += format_double(e->value) + "," + format_double(e->std_error);
        } else {
          line += ',';
        }
      }
    }
    lines[r] = std::move(line);
  });

  std::string csv = "# uncertainty_cli " + std::string(kToolVersion) + "; observables=" + cfg.set.name +
                    "; spin convention: S_i = sigma_i with eigenvalues +1/-1 (hbar = 1)\n";
  const auto header = csv_columns(cfg.set, cfg.simulation.has_value());
  for (std::size_t c = 0; c < header.size(); ++c) {
    csv += (c ? "," : "") + header[c];
  }
  csv += '\n';
  for (const auto &line : lines) {
    csv += line;
    csv += '\n';
  }
  return ScanOutput{std::move(csv), plot_script(cfg, csv_filename)};
}

ScanOutput simulate(const ScanConfig &cfg, std::string_view csv_filename) {
  if (!cfg.simulation) {
    throw ConfigError("simulate requires a simulation configuration");
  }
  return scan(cfg, csv_filename);
}

}  // namespace uncertainty::driver
