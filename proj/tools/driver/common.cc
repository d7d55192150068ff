#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "driver/driver.h"
#include "json.hpp"
#include "uncertainty/spinhalf.h"

namespace uncertainty::driver {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

double parse_number(std::string_view text, std::string_view context) {
  text = trim(text);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("cannot parse '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

std::size_t parse_count(std::string_view text) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("grid count '" + std::string(text) + "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

std::vector<double> Grid::points() const {
  if (count == 0) {
    throw ConfigError("grid count must be at least 1");
  }
  if (count == 1) {
    return {start};
  }
  std::vector<double> out(count);
  const double step = (end - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    out[i] = start + static_cast<double>(i) * step;
  }
  out.back() = end;
  return out;
}

ScanMode parse_mode(std::string_view text) {
  if (text == "product") {
    return ScanMode::kProduct;
  }
  if (text == "sum") {
    return ScanMode::kSum;
  }
  if (text == "both") {
    return ScanMode::kBoth;
  }
  throw ConfigError("mode must be product, sum or both, got '" + std::string(text) + "'");
}

double parse_angle(std::string_view text) {
  text = trim(text);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) {
    return parse_number(text, "angle");
  }
  std::string_view factor = trim(text.substr(0, pi_at));
  std::string_view divisor = trim(text.substr(pi_at + 2));
  if (!factor.empty() && factor.back() == '*') {
    factor.remove_suffix(1);
  }
  double value = std::numbers::pi;
  if (factor == "-") {
    value = -value;
  } else if (!factor.empty()) {
    value *= parse_number(factor, "angle factor");
  }
  if (!divisor.empty()) {
    if (divisor.front() != '/') {
      throw ConfigError("cannot parse angle '" + std::string(text) + "'");
    }
    const double d = parse_number(divisor.substr(1), "angle divisor");
    if (d == 0) {
      throw ConfigError("angle divisor is zero");
    }
    value /= d;
  }
  return value;
}

Grid parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto comma = text.find(',', begin);
    parts.push_back(text.substr(begin, comma - begin));
    if (comma == std::string_view::npos) {
      break;
    }
    begin = comma + 1;
  }
  if (parts.size() == 1) {
    const double value = parse_angle(parts[0]);
    return Grid{value, value, 1};
  }
  if (parts.size() != 3) {
    throw ConfigError("grid must be 'start,end,count' or a single angle, got '" + std::string(text) + "'");
  }
  return Grid{parse_angle(parts[0]), parse_angle(parts[1]), parse_count(parts[2])};
}

bool ObservableSet::is_pauli() const { return is_pauli_triple(observables); }

ObservableSet pauli_set() { return ObservableSet{"pauli3", pauli_triple()}; }

ObservableSet parse_observable_json(std::string_view json_text, std::string name) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError("observable file: " + std::string(e.what()));
  }
  if (!document.is_array() || document.empty()) {
    throw ConfigError("observable file: expected a non-empty top-level array of matrices");
  }
  ObservableSet set{std::move(name), {}};
  for (std::size_t m = 0; m < document.size(); ++m) {
    const auto &rows = document[m];
    const std::string where = "observable file: matrix " + std::to_string(m);
    if (!rows.is_array() || rows.empty()) {
      throw ConfigError(where + " must be a non-empty array of rows");
    }
    const std::size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto &row : rows) {
      if (!row.is_array() || row.size() != dim) {
        throw ConfigError(where + " is not square");
      }
      for (const auto &pair : row) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
          throw ConfigError(where + " has an entry that is not an [re, im] pair");
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
      }
    }
    try {
      set.observables.emplace_back(HermitianMatrix(ComplexMatrix(dim, std::move(entries))));
    } catch (const std::invalid_argument &e) {
      throw ConfigError(where + ": " + e.what());
    }
    if (set.observables.back().dim() != set.observables.front().dim()) {
      throw ConfigError(where + " has a different dimension from matrix 0");
    }
  }
  if (set.observables.size() < 2) {
    throw ConfigError("observable file: need at least two observables");
  }
  return set;
}

ObservableSet load_observable_set(std::string_view spec) {
  if (spec == "pauli3") {
    return pauli_set();
  }
  constexpr std::string_view kFilePrefix = "file:";
  if (!spec.starts_with(kFilePrefix)) {
    throw ConfigError("observable set must be 'pauli3' or 'file:<path>', got '" + std::string(spec) + "'");
  }
  const std::string path(spec.substr(kFilePrefix.size()));
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read observable file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_observable_json(buffer.str(), std::string(spec));
}

PureState grid_state(double theta, double phi, std::size_t dim) {
  if (dim < 2) {
    throw ConfigError("grid states need dimension >= 2");
  }
  const ComplexVector qubit = bloch_state(theta, phi);
  ComplexVector amplitudes(dim);
  amplitudes[0] = qubit[0];
  amplitudes[1] = qubit[1];
  return PureState(std::move(amplitudes));
}

std::string format_double(double value) {
  if (value == 0) {
    value = 0;  // no "-0"
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.11e", value);
  return buffer;
}

}  // namespace uncertainty::driver
