// uncertainty_cli: Bloch-grid scans, simulated experiments, fuzz verification
// and bound tournaments for variance uncertainty relations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "driver/driver.h"

namespace fs = std::filesystem;
using namespace uncertainty;
using namespace uncertainty::driver;

namespace {

void write_file(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) {
    throw IoError("cannot write '" + path.string() + "'");
  }
}

/// Writes to `out_path`, or stdout when it is empty.
void emit(const std::string &out_path, const std::string &content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

void emit_scan(const std::string &out_path, bool plot, const ScanConfig &cfg, bool simulated) {
  const std::string csv_name = out_path.empty() ? (simulated ? "simulate.csv" : "scan.csv")
                                                : fs::path(out_path).filename().string();
  const ScanOutput output = simulated ? simulate(cfg, csv_name) : scan(cfg, csv_name);
  emit(out_path, output.csv);
  if (plot && !out_path.empty()) {
    fs::path script = out_path;
    script.replace_extension(".gp");
    write_file(script, output.plot_script);
  }
}

std::vector<std::size_t> parse_sizes(const std::string &text) {
  std::vector<std::size_t> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto comma = text.find(',', begin);
    const std::string part = text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(part, &used));
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
    } catch (const std::exception &) {
      throw ConfigError("expected a comma-separated integer list, got '" + text + "'");
    }
    if (comma == std::string::npos) {
      break;
    }
    begin = comma + 1;
  }
  return out;
}

struct ScanOptions {
  std::string set = "pauli3";
  std::string theta = "0,pi,61";
  std::string phi = "0,2pi,61";
  std::string mode = "both";
  std::string out;
  bool no_plot = false;
  std::size_t threads = 0;
  std::uint64_t shots = 2800;
  std::size_t bootstrap = 1000;
  std::uint64_t seed = 1;

  ScanConfig config(bool simulated) const {
    ScanConfig cfg;
    cfg.set = load_observable_set(set);
    cfg.theta = parse_grid(theta);
    cfg.phi = parse_grid(phi);
    cfg.mode = parse_mode(mode);
    cfg.threads = threads;
    if (simulated) {
      cfg.simulation = SimConfig{.shots = shots, .seed = Seed{seed}, .bootstrap_resamples = bootstrap};
    }
    return cfg;
  }
};

void add_scan_options(CLI::App *cmd, ScanOptions &opts) {
  cmd->add_option("--set", opts.set, "Observable set: pauli3 or file:<path> (JSON)")->capture_default_str();
  cmd->add_option("--theta", opts.theta, "Theta grid 'start,end,count' or a single angle (accepts pi)")
      ->capture_default_str();
  cmd->add_option("--phi", opts.phi, "Phi grid 'start,end,count' or a single angle")->capture_default_str();
  cmd->add_option("--mode", opts.mode, "Plot panels: product, sum or both")->capture_default_str();
  cmd->add_option("-o,--out", opts.out, "CSV output path (stdout when omitted)");
  cmd->add_flag("--no-plot", opts.no_plot, "Skip the gnuplot script next to the CSV");
  cmd->add_option("--threads", opts.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Variance uncertainty-relation bounds: scans, simulation, fuzzing and tournaments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ScanOptions scan_opts;
  auto *scan_cmd = app.add_subcommand("scan", "Evaluate every bound over a Bloch-sphere grid and write CSV");
  add_scan_options(scan_cmd, scan_opts);

  ScanOptions sim_opts;
  auto *sim_cmd = app.add_subcommand("simulate", "Scan plus simulated projective measurements with error bars");
  add_scan_options(sim_cmd, sim_opts);
  sim_cmd->add_option("--shots", sim_opts.shots, "Counts per measurement setting")->capture_default_str();
  sim_cmd->add_option("--bootstrap", sim_opts.bootstrap, "Bootstrap resamples")->capture_default_str();
  sim_cmd->add_option("--seed", sim_opts.seed, "Master seed")->capture_default_str();

  std::string fuzz_dims = "2,3,4,5,6";
  std::string fuzz_nobs = "2,3,4";
  FuzzConfig fuzz_cfg;
  std::uint64_t fuzz_seed = 1;
  std::string fuzz_out;
  auto *fuzz_cmd = app.add_subcommand("fuzz", "Check every bound and tightness chain on random instances");
  fuzz_cmd->add_option("--dims", fuzz_dims, "Hilbert-space dimensions to draw from")->capture_default_str();
  fuzz_cmd->add_option("--nobs", fuzz_nobs, "Observable counts to draw from")->capture_default_str();
  fuzz_cmd->add_option("--trials", fuzz_cfg.trials, "Random instances")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_seed, "Master seed")->capture_default_str();
  fuzz_cmd->add_option("--threads", fuzz_cfg.threads, "Worker threads (0 = all cores)");
  fuzz_cmd->add_option("-o,--out", fuzz_out, "Report path (stdout when omitted)");

  std::string tour_set = "pauli3";
  std::string tour_theta = "0,pi,61";
  std::string tour_phi = "0,2pi,61";
  std::size_t tour_random = 0;
  std::uint64_t tour_seed = 1;
  std::string tour_mode = "both";
  std::string tour_out;
  std::size_t tour_threads = 0;
  auto *tour_cmd = app.add_subcommand("tournament", "Find the largest bound per state and tally win fractions");
  tour_cmd->add_option("--set", tour_set, "Observable set: pauli3 or file:<path>")->capture_default_str();
  tour_cmd->add_option("--theta", tour_theta, "Theta grid")->capture_default_str();
  tour_cmd->add_option("--phi", tour_phi, "Phi grid")->capture_default_str();
  tour_cmd->add_option("--random", tour_random, "Use this many Haar-random states instead of the grid");
  tour_cmd->add_option("--seed", tour_seed, "Seed for random states")->capture_default_str();
  tour_cmd->add_option("--mode", tour_mode, "product, sum or both")->capture_default_str();
  tour_cmd->add_option("--threads", tour_threads, "Worker threads (0 = all cores)");
  tour_cmd->add_option("-o,--out", tour_out, "Summary path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*scan_cmd) {
      emit_scan(scan_opts.out, !scan_opts.no_plot, scan_opts.config(false), false);
    } else if (*sim_cmd) {
      emit_scan(sim_opts.out, !sim_opts.no_plot, sim_opts.config(true), true);
    } else if (*fuzz_cmd) {
      fuzz_cfg.dims = parse_sizes(fuzz_dims);
      fuzz_cfg.n_obs = parse_sizes(fuzz_nobs);
      fuzz_cfg.seed = Seed{fuzz_seed};
      const FuzzReport report = fuzz(fuzz_cfg);
      emit(fuzz_out, report.render());
      if (report.total_violations() > 0) {
        std::cerr << "fuzz: " << report.total_violations() << " violations\n";
        return kExitViolation;
      }
    } else if (*tour_cmd) {
      TournamentConfig cfg;
      cfg.set = load_observable_set(tour_set);
      if (tour_random > 0) {
        cfg.grid.reset();
        cfg.random_states = tour_random;
      } else {
        cfg.grid = std::pair{parse_grid(tour_theta), parse_grid(tour_phi)};
      }
      cfg.seed = Seed{tour_seed};
      cfg.mode = parse_mode(tour_mode);
      cfg.threads = tour_threads;
      emit(tour_out, tournament(cfg).render());
    }
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError &e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
