// Scan, simulate, fuzz and tournament drivers behind the command-line tool.
// Everything returns in-memory documents; the executable only writes them.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uncertainty/bounds.h"
#include "uncertainty/expsim.h"
#include "uncertainty/quantum.h"

namespace uncertainty::driver {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Invalid user configuration (exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output (exit status 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitViolation = 2,
  kExitIo = 3,
};

/// Inclusive, evenly spaced grid. count == 1 yields {start}.
struct Grid {
  double start = 0;
  double end = 0;
  std::size_t count = 1;

  std::vector<double> points() const;
};

enum class ScanMode { kProduct, kSum, kBoth };
ScanMode parse_mode(std::string_view text);

/// Parses "0.3", "pi", "2pi", "2*pi", "pi/12", "3*pi/4", "-pi/2".
double parse_angle(std::string_view text);
/// "start,end,count" or a single angle.
Grid parse_grid(std::string_view text);

struct ObservableSet {
  std::string name;
  std::vector<Observable> observables;

  std::size_t dim() const { return observables.front().dim(); }
  bool is_pauli() const;
};

ObservableSet pauli_set();
/// Top-level JSON array of matrices; each matrix is a dim x dim array of
/// [re, im] pairs, row-major. Throws ConfigError on malformed or
/// non-Hermitian input.
ObservableSet parse_observable_json(std::string_view json_text, std::string name);
/// "pauli3" or "file:<path>". Throws IoError when the file cannot be read.
ObservableSet load_observable_set(std::string_view spec);

/// Bloch state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, embedded in the
/// first two basis states when dim > 2.
PureState grid_state(double theta, double phi, std::size_t dim);

/// 12 significant digits, scientific notation.
std::string format_double(double value);

struct ScanConfig {
  ObservableSet set = pauli_set();
  Grid theta{0, 3.141592653589793, 61};
  Grid phi{0, 6.283185307179586, 61};
  ScanMode mode = ScanMode::kBoth;
  std::optional<SimConfig> simulation;
  std::size_t threads = 0;

  /// Throws ConfigError.
  void validate() const;
};

/// Analytic column names in output order, starting with theta and phi.
std::vector<std::string> analytic_columns();
/// Columns that carry values for this set (lhs columns and applicable bounds).
std::vector<std::string> populated_columns(const ObservableSet &set);
std::vector<std::string> csv_columns(const ObservableSet &set, bool simulation);

struct ScanOutput {
  std::string csv;
  std::string plot_script;
};

/// One row per grid point, theta-major. Empirical columns are appended when
/// cfg.simulation is set. The plot script loads `csv_filename`.
ScanOutput scan(const ScanConfig &cfg, std::string_view csv_filename = "scan.csv");
/// scan() with simulation required.
ScanOutput simulate(const ScanConfig &cfg, std::string_view csv_filename = "simulate.csv");

struct FuzzConfig {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6};
  std::vector<std::size_t> n_obs{2, 3, 4};
  std::size_t trials = 10000;
  Seed seed{1};
  std::size_t threads = 0;

  void validate() const;
};

/// Outcome of one invariant over all trials it applied to.
struct CheckSummary {
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  /// Smallest (lhs - rhs) seen; for invariance checks the largest deviation.
  double worst = 0;
};

struct FuzzReport {
  FuzzConfig config;
  std::map<std::string, CheckSummary> checks;

  std::size_t total_violations() const;
  std::string render() const;
};

FuzzReport fuzz(const FuzzConfig &cfg);

struct TournamentConfig {
  ObservableSet set = pauli_set();
  /// Grid states when set; otherwise `random_states` Haar-random states.
  std::optional<std::pair<Grid, Grid>> grid = std::pair{Grid{0, 3.141592653589793, 61}, Grid{0, 6.283185307179586, 61}};
  std::size_t random_states = 0;
  Seed seed{1};
  ScanMode mode = ScanMode::kBoth;
  std::size_t threads = 0;

  void validate() const;
};

struct TournamentCategory {
  BoundKind kind;
  std::vector<BoundId> candidates;
  BoundId contender;
  /// Fraction of states at which each candidate attains the maximum
  /// (within 1e-12; ties count for every tied candidate).
  std::map<BoundId, double> win_fraction;
  /// Per state: first candidate in `candidates` order attaining the maximum.
  std::vector<BoundId> winners;
  /// Indices of states where the contender is below the maximum by more
  /// than 1e-12.
  std::vector<std::size_t> losses;
};

struct TournamentResult {
  std::vector<std::string> state_labels;
  std::vector<TournamentCategory> categories;

  std::string render() const;
};

/// Candidates entering the product or sum category for a set.
std::vector<BoundId> tournament_candidates(const ObservableSet &set, BoundKind kind);
TournamentResult tournament(const TournamentConfig &cfg);

}  // namespace uncertainty::driver
