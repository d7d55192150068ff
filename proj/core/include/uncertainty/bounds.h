// Variance uncertainty lower bounds for N >= 2 observables.
//
// Each bound exists at two levels: a formula over measurement statistics
// (u-vectors, signed projection vectors, moments) and a convenience overload
// over (observables, state). The simulated experiment reuses the formula
// level with statistics estimated from counts.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uncertainty/quantum.h"

namespace uncertainty {

enum class BoundId {
  kRobertson,
  kMondalProduct,
  kMondalSum,
  kCarlsonProduct,
  kAdditive,
  kVarianceDecomposition,
  kSpinProHr,
  kSpinProFd,
  kSpinProClosed,
  kSpinSumSong,
  kSpinSumFd,
};

enum class BoundKind { kProduct, kSum };

/// Stable identifier used in CSV headers and reports, e.g. "carlson_product".
std::string_view bound_name(BoundId id);
std::optional<BoundId> bound_from_name(std::string_view name);
BoundKind bound_kind(BoundId id);
/// Every identifier in declaration order.
std::span<const BoundId> all_bounds();

/// Pairwise Lambda_ij = ||u_i + u_j|| for i < j and the correction term
/// Delta: (sum Lambda_ij)^2 / (N-1)^2 for N >= 3, Lambda_12^2 for N = 2.
struct LambdaSet {
  std::size_t n_obs = 0;
  std::vector<double> lambda;  ///< pairs in (0,1), (0,2), ..., (1,2), ... order
  double delta = 0;

  double at(std::size_t i, std::size_t j) const;
  double sum_of_squares() const;
};

// ---- formula level -------------------------------------------------------

/// [sum_k (prod_i rows[i][k]^2)^(1/N)]^N over equal-length nonnegative rows,
/// paired by index. A zero entry makes its column term 0.
double carlson_rhs(std::span<const std::vector<double>> rows);

double mondal_product(const SignedProjectionVector &v, const SignedProjectionVector &w);
double mondal_sum(const SignedProjectionVector &v, const SignedProjectionVector &w);
double carlson_product(std::span<const UVector> u);
LambdaSet lambda_set(std::span<const UVector> u);
/// (sum Lambda^2 - Delta) / (N - 2) for N >= 3; Lambda_12^2 / 2 for N = 2.
double additive_bound(const LambdaSet &lambda);
/// sum Lambda^2 / (2 (N - 1)): the weaker bound the additive one improves on.
double simple_sum_bound(const LambdaSet &lambda);
/// (1/N) Var(sum A) + 2 / (N^2 (N-1)) [sum_{i<j} sqrt(Var(A_i - A_j))]^2.
double variance_decomposition_sum_bound(std::size_t n_obs, double sum_variance,
                                        std::span<const double> difference_variances);

// ---- observable level ----------------------------------------------------

/// |<[A,B]>|^2 / 4.
double robertson_product(const Observable &a, const Observable &b, const PureState &psi);
double mondal_product(const Observable &a, const Observable &b, const PureState &psi);
double mondal_sum(const Observable &a, const Observable &b, const PureState &psi);
double carlson_product(std::span<const Observable> obs, const PureState &psi);
LambdaSet lambda_set(std::span<const Observable> obs, const PureState &psi);
double additive_bound(std::span<const Observable> obs, const PureState &psi);
double variance_decomposition_sum_bound(std::span<const Observable> obs, const PureState &psi);

/// Hermitian observable i[A,B]; its mean squared over four is the Robertson
/// bound, which makes that bound measurable as one more setting.
Observable commutator_observable(const Observable &a, const Observable &b);
/// A_i - A_j for every pair i < j, in LambdaSet pair order.
std::vector<Observable> pair_difference_observables(std::span<const Observable> obs);
Observable sum_observable(std::span<const Observable> obs);

// ---- aggregation ---------------------------------------------------------

/// Everything a bound report needs, from either exact state data or counts.
struct MeasurementRecord {
  std::vector<MeasurementStatistics> observables;
  std::optional<double> commutator_mean;  ///< <i[A,B]>, N = 2 only
  double sum_variance = 0;                ///< Var(sum_i A_i)
  std::vector<double> difference_variances;
  bool pauli_triple = false;
  bool degenerate_spectrum = false;
};

MeasurementRecord analytic_record(std::span<const Observable> obs, const PureState &psi);

/// Left-hand sides plus every applicable bound. Inapplicable bounds are
/// absent from `values`.
struct BoundReport {
  double lhs_product = 0;
  double lhs_sum = 0;
  std::map<BoundId, double> values;
  bool degenerate_spectrum = false;

  bool applicable(BoundId id) const { return values.contains(id); }
  std::optional<double> value(BoundId id) const;
  double lhs(BoundId id) const;
  /// lhs - bound for an applicable bound.
  double margin(BoundId id) const;
  /// Applicable bounds exceeding their lhs by more than
  /// relative_slack * max(1, lhs).
  std::vector<BoundId> violations(double relative_slack) const;
};

BoundReport evaluate_bounds(const MeasurementRecord &record);
/// Throws std::invalid_argument for fewer than two observables or mismatched
/// dimensions.
BoundReport bound_report(std::span<const Observable> obs, const PureState &psi);

}  // namespace uncertainty
