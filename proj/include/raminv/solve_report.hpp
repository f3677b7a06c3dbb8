#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace raminv {

/// One row of a solver trace. `kl` holds the solver's discrepancy measure
/// (Kullback-Leibler divergence for EM, squared-residual cost for
/// Levenberg-Marquardt, residual 2-norm for the Tikhonov sweep);
/// `delta_max` is max_i Delta_i * sqrt(i), the quantity compared against
/// the stopping threshold K (NaN when no rule was evaluated).
struct SolveCheckpoint {
    std::size_t iteration = 0;
    double kl = std::numeric_limits<double>::quiet_NaN();
    double delta_max = std::numeric_limits<double>::quiet_NaN();
};

/// Diagnostics carried out of every iterative solve.
struct SolveReport {
    enum class StoppedBy { criterion, max_iterations };

    std::size_t iterations_used = 0;
    StoppedBy stopped_by = StoppedBy::max_iterations;
    std::vector<SolveCheckpoint> trace;
    std::vector<double> delta;   ///< final cumulative-residual vector over valid points
    double wall_time_s = 0.0;

    /// Regularization parameter selected by the Tikhonov sweep (NaN otherwise).
    double selected_eta = std::numeric_limits<double>::quiet_NaN();
    /// Count of non-positive data entries clamped to the floor (EM only).
    std::size_t floored_count = 0;
};

} // namespace raminv
