#include "uncertainty/bounds.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uncertainty/spinhalf.h"

namespace uncertainty {

namespace {

constexpr std::array kAllBounds = {
    BoundId::kRobertson,      BoundId::kMondalProduct,         BoundId::kMondalSum,  BoundId::kCarlsonProduct,
    BoundId::kAdditive,       BoundId::kVarianceDecomposition, BoundId::kSpinProHr,  BoundId::kSpinProFd,
    BoundId::kSpinProClosed,  BoundId::kSpinSumSong,           BoundId::kSpinSumFd,
};

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("bound inputs have different lengths (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

void require_observables(std::span<const Observable> obs, const PureState &psi) {
  if (obs.size() < 2) {
    throw std::invalid_argument("bounds need at least two observables, got " + std::to_string(obs.size()));
  }
  for (const auto &a : obs) {
    if (a.dim() != psi.dim()) {
      throw std::invalid_argument("observable of dim " + std::to_string(a.dim()) + " applied to state of dim " +
                                  std::to_string(psi.dim()));
    }
  }
}

void require_pair(const Observable &a, const Observable &b, const PureState &psi) {
  if (a.dim() != b.dim() || a.dim() != psi.dim()) {
    throw std::invalid_argument("two-observable bound: dimension mismatch");
  }
}

std::vector<UVector> u_vectors(std::span<const Observable> obs, const PureState &psi) {
  std::vector<UVector> out;
  out.reserve(obs.size());
  for (const auto &a : obs) {
    out.push_back(u_vector(a, psi));
  }
  return out;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::kRobertson:
      return "robertson";
    case BoundId::kMondalProduct:
      return "mondal_product";
    case BoundId::kMondalSum:
      return "mondal_sum";
    case BoundId::kCarlsonProduct:
      return "carlson_product";
    case BoundId::kAdditive:
      return "additive";
    case BoundId::kVarianceDecomposition:
      return "variance_decomposition";
    case BoundId::kSpinProHr:
      return "spin_pro_hr";
    case BoundId::kSpinProFd:
      return "spin_pro_fd";
    case BoundId::kSpinProClosed:
      return "spin_pro_closed";
    case BoundId::kSpinSumSong:
      return "spin_sum_song";
    case BoundId::kSpinSumFd:
      return "spin_sum_fd";
  }
  throw std::invalid_argument("unknown BoundId");
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (BoundId id : kAllBounds) {
    if (bound_name(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

BoundKind bound_kind(BoundId id) {
  switch (id) {
    case BoundId::kRobertson:
    case BoundId::kMondalProduct:
    case BoundId::kCarlsonProduct:
    case BoundId::kSpinProHr:
    case BoundId::kSpinProFd:
    case BoundId::kSpinProClosed:
      return BoundKind::kProduct;
    default:
      return BoundKind::kSum;
  }
}

std::span<const BoundId> all_bounds() { return kAllBounds; }

double LambdaSet::at(std::size_t i, std::size_t j) const {
  if (i > j) {
    std::swap(i, j);
  }
  if (i == j || j >= n_obs) {
    throw std::out_of_range("LambdaSet: invalid pair");
  }
  // Offset of row i in the packed upper triangle.
  const std::size_t offset = i * n_obs - i * (i + 1) / 2;
  return lambda[offset + (j - i - 1)];
}

double LambdaSet::sum_of_squares() const {
  double sum = 0;
  for (double l : lambda) {
    sum += l * l;
  }
  return sum;
}

double carlson_rhs(std::span<const std::vector<double>> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("carlson_rhs: no rows");
  }
  const std::size_t m = rows.front().size();
  const double n = static_cast<double>(rows.size());
  for (const auto &row : rows) {
    require_same_length(row.size(), m);
  }
  double sum = 0;
  for (std::size_t k = 0; k < m; ++k) {
    double product = 1;
    for (const auto &row : rows) {
      product *= row[k] * row[k];
    }
    if (product > 0) {
      sum += std::pow(product, 1 / n);
    }
  }
  return std::pow(sum, n);
}

double mondal_product(const SignedProjectionVector &v, const SignedProjectionVector &w) {
  require_same_length(v.values.size(), w.values.size());
  double sum = 0;
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    sum += v.values[k] * w.values[k];
  }
  return sum * sum;
}

double mondal_sum(const SignedProjectionVector &v, const SignedProjectionVector &w) {
  require_same_length(v.values.size(), w.values.size());
  double sum = 0;
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    const double s = v.values[k] + w.values[k];
    sum += s * s;
  }
  return sum / 2;
}

double carlson_product(std::span<const UVector> u) {
  if (u.size() < 2) {
    throw std::invalid_argument("carlson_product: need N >= 2");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(u.size());
  for (const auto &vec : u) {
    rows.push_back(vec.values);
  }
  return carlson_rhs(rows);
}

LambdaSet lambda_set(std::span<const UVector> u) {
  if (u.size() < 2) {
    throw std::invalid_argument("lambda_set: need N >= 2");
  }
  const std::size_t n = u.size();
  LambdaSet out{.n_obs = n, .lambda = {}, .delta = 0};
  out.lambda.reserve(pair_count(n));
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      require_same_length(u[i].values.size(), u[j].values.size());
      double sq = 0;
      for (std::size_t k = 0; k < u[i].values.size(); ++k) {
        const double s = u[i].values[k] + u[j].values[k];
        sq += s * s;
      }
      out.lambda.push_back(std::sqrt(sq));
      sum += out.lambda.back();
    }
  }
  if (n == 2) {
    out.delta = out.lambda[0] * out.lambda[0];
  } else {
    const double denom = static_cast<double>(n - 1);
    out.delta = sum * sum / (denom * denom);
  }
  return out;
}

double additive_bound(const LambdaSet &lambda) {
  if (lambda.n_obs < 2) {
    throw std::invalid_argument("additive_bound: need N >= 2");
  }
  if (lambda.n_obs == 2) {
    return lambda.lambda[0] * lambda.lambda[0] / 2;
  }
  return (lambda.sum_of_squares() - lambda.delta) / static_cast<double>(lambda.n_obs - 2);
}

double simple_sum_bound(const LambdaSet &lambda) {
  return lambda.sum_of_squares() / (2 * static_cast<double>(lambda.n_obs - 1));
}

double variance_decomposition_sum_bound(std::size_t n_obs, double sum_variance,
                                        std::span<const double> difference_variances) {
  if (n_obs < 2) {
    throw std::invalid_argument("variance_decomposition_sum_bound: need N >= 2");
  }
  require_same_length(difference_variances.size(), pair_count(n_obs));
  const double n = static_cast<double>(n_obs);
  double deviations = 0;
  for (double v : difference_variances) {
    deviations += std::sqrt(v);
  }
  return sum_variance / n + 2 / (n * n * (n - 1)) * deviations * deviations;
}

double robertson_product(const Observable &a, const Observable &b, const PureState &psi) {
  require_pair(a, b, psi);
  const ComplexMatrix c = commutator(a.matrix(), b.matrix());
  const Complex mean = inner_product(psi.amplitudes(), c * psi.amplitudes());
  return std::norm(mean) / 4;
}

double mondal_product(const Observable &a, const Observable &b, const PureState &psi) {
  require_pair(a, b, psi);
  return mondal_product(signed_projection_vector(a, psi), signed_projection_vector(b, psi));
}

double mondal_sum(const Observable &a, const Observable &b, const PureState &psi) {
  require_pair(a, b, psi);
  return mondal_sum(signed_projection_vector(a, psi), signed_projection_vector(b, psi));
}

double carlson_product(std::span<const Observable> obs, const PureState &psi) {
  require_observables(obs, psi);
  return carlson_product(u_vectors(obs, psi));
}

LambdaSet lambda_set(std::span<const Observable> obs, const PureState &psi) {
  require_observables(obs, psi);
  return lambda_set(u_vectors(obs, psi));
}

double additive_bound(std::span<const Observable> obs, const PureState &psi) {
  return additive_bound(lambda_set(obs, psi));
}

double variance_decomposition_sum_bound(std::span<const Observable> obs, const PureState &psi) {
  require_observables(obs, psi);
  std::vector<double> differences;
  for (const auto &d : pair_difference_observables(obs)) {
    differences.push_back(variance(d, psi));
  }
  return variance_decomposition_sum_bound(obs.size(), variance(sum_observable(obs), psi), differences);
}

Observable commutator_observable(const Observable &a, const Observable &b) {
  return Observable(HermitianMatrix(Complex(0, 1) * commutator(a.matrix(), b.matrix())));
}

std::vector<Observable> pair_difference_observables(std::span<const Observable> obs) {
  std::vector<Observable> out;
  out.reserve(pair_count(obs.size()));
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      const std::array terms = {std::pair{1.0, obs[i]}, std::pair{-1.0, obs[j]}};
      out.push_back(composite_observable(terms));
    }
  }
  return out;
}

Observable sum_observable(std::span<const Observable> obs) {
  std::vector<std::pair<double, Observable>> terms;
  terms.reserve(obs.size());
  for (const auto &a : obs) {
    terms.emplace_back(1.0, a);
  }
  return composite_observable(terms);
}

MeasurementRecord analytic_record(std::span<const Observable> obs, const PureState &psi) {
  require_observables(obs, psi);
  MeasurementRecord record;
  for (const auto &a : obs) {
    record.observables.push_back(measurement_statistics(a, psi));
    record.degenerate_spectrum = record.degenerate_spectrum || a.has_degenerate_spectrum();
  }
  if (obs.size() == 2) {
    record.commutator_mean = expectation(commutator_observable(obs[0], obs[1]), psi);
  }
  record.sum_variance = variance(sum_observable(obs), psi);
  for (const auto &d : pair_difference_observables(obs)) {
    record.difference_variances.push_back(variance(d, psi));
  }
  record.pauli_triple = is_pauli_triple(obs);
  return record;
}

std::optional<double> BoundReport::value(BoundId id) const {
  auto it = values.find(id);
  if (it == values.end()) {
    return std::nullopt;
  }
  return it->second;
}

double BoundReport::lhs(BoundId id) const { return bound_kind(id) == BoundKind::kProduct ? lhs_product : lhs_sum; }

double BoundReport::margin(BoundId id) const {
  auto v = value(id);
  if (!v) {
    throw std::out_of_range("BoundReport: bound " + std::string(bound_name(id)) + " is not applicable");
  }
  return lhs(id) - *v;
}

std::vector<BoundId> BoundReport::violations(double relative_slack) const {
  std::vector<BoundId> out;
  for (const auto &[id, v] : values) {
    const double side = lhs(id);
    if (v > side + relative_slack * std::max(1.0, side)) {
      out.push_back(id);
    }
  }
  return out;
}

BoundReport evaluate_bounds(const MeasurementRecord &record) {
  const std::size_t n = record.observables.size();
  if (n < 2) {
    throw std::invalid_argument("evaluate_bounds: need at least two observables");
  }
  BoundReport report;
  report.degenerate_spectrum = record.degenerate_spectrum;
  report.lhs_product = 1;
  std::vector<UVector> u;
  std::vector<SignedProjectionVector> signed_vectors;
  for (const auto &stats : record.observables) {
    report.lhs_product *= stats.variance;
    report.lhs_sum += stats.variance;
    u.push_back(u_vector(stats));
    signed_vectors.push_back(signed_projection_vector(stats));
  }

  if (n == 2) {
    if (record.commutator_mean) {
      report.values[BoundId::kRobertson] = *record.commutator_mean * *record.commutator_mean / 4;
    }
    report.values[BoundId::kMondalProduct] = mondal_product(signed_vectors[0], signed_vectors[1]);
    report.values[BoundId::kMondalSum] = mondal_sum(signed_vectors[0], signed_vectors[1]);
  }
  report.values[BoundId::kCarlsonProduct] = carlson_product(u);
  report.values[BoundId::kAdditive] = additive_bound(lambda_set(u));
  report.values[BoundId::kVarianceDecomposition] =
      variance_decomposition_sum_bound(n, record.sum_variance, record.difference_variances);

  if (record.pauli_triple) {
    const SpinExpectations s{record.observables[0].mean, record.observables[1].mean, record.observables[2].mean};
    const SpinProductBounds product = spin_product_bounds(s);
    const SpinSumBounds sum = spin_sum_bounds(s);
    report.values[BoundId::kSpinProHr] = product.pro_hr;
    report.values[BoundId::kSpinProFd] = product.pro_fd;
    report.values[BoundId::kSpinProClosed] = product.pro_closed;
    report.values[BoundId::kSpinSumSong] = sum.sum_song;
    report.values[BoundId::kSpinSumFd] = sum.sum_fd;
  }
  return report;
}

BoundReport bound_report(std::span<const Observable> obs, const PureState &psi) {
  return evaluate_bounds(analytic_record(obs, psi));
}

}  // namespace uncertainty
