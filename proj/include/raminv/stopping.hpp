#pragma once

#include <cstdint>
#include <vector>

#include "raminv/forward_model.hpp"

namespace raminv {

/// Statistical stopping criterion on cumulative normalized residuals.
///
/// With Delta_i the running mean of (P_j - Pbar_j)/sigma_j over the first
/// i valid points, iterations stop once Delta_i < K/sqrt(i) for every i.
/// The default is the signed inequality exactly as stated; `two_sided`
/// switches to |Delta_i| < K/sqrt(i).
struct StoppingRule {
    double K = 3.0;
    bool two_sided = false;
    ForwardModelConfig forward;  ///< maps candidate profiles back to signal space
};

/// Signal predicted by an extinction profile:
/// Pbar_i = (C/z_i^2) rho(z_i) exp(-(Hx)_i). Identical formula to the
/// noise-free synthesis path (shared implementation).
LidarSignal predict_signal(const ExtinctionProfile& x, const ForwardModelConfig& config);

/// Cumulative means Delta_i = (1/i) sum_{j<=i} (P_j - Pbar_j)/sigma_j,
/// indexing only valid points in order. When `valid` is null a point is
/// valid if P_j > 0 and all quantities are finite; sigma_j <= 0 on a valid
/// point throws NumericError.
std::vector<double> cumulative_residuals(const LidarSignal& measured, const LidarSignal& predicted,
                                         const std::vector<std::uint8_t>* valid = nullptr);

/// True iff Delta_i < K/sqrt(i) for every i (strict; i is 1-based).
/// Equality counts as a violation. `two_sided` tests |Delta_i| instead.
bool criterion_satisfied(const std::vector<double>& delta, double K, bool two_sided = false);

/// max_i Delta_i * sqrt(i) (or with |Delta_i| when two_sided): the value
/// that must drop below K for the criterion to hold. -inf for empty input.
double criterion_statistic(const std::vector<double>& delta, bool two_sided = false);

} // namespace raminv
