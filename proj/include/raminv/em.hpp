#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "raminv/forward_model.hpp"
#include "raminv/solve_report.hpp"
#include "raminv/stopping.hpp"

namespace raminv {

/// Expectation-Maximization solver settings.
struct EmConfig {
    std::size_t max_iterations = 20000;
    double initial_value = 1e-5;   ///< uniform strictly positive initial guess
    double data_floor = 1e-12;     ///< substituted for non-positive y entries
    bool mask_nonpositive = false; ///< alternative: drop non-positive y entries instead
    std::size_t check_every = 10;  ///< iterations between stopping-rule checks
};

/// Kullback-Leibler divergence between data y and predicted Hx:
///   (2/N) sum over valid i of [ y_i log(y_i/(Hx)_i) + (Hx)_i - y_i + y_i log y_i ]
/// with N the number of valid entries. The x-independent y log y term is
/// kept so reported values match the defining formula; it does not move
/// the minimizer. Entries with y_i = 0 contribute (Hx)_i only (the limit).
/// Throws NumericError when (Hx)_i <= 0 on a valid entry.
double kl_divergence(const TransformedData& y, const ExtinctionProfile& x,
                     const AltitudeGrid& grid, Quadrature q = Quadrature::rectangle);

/// One multiplicative update x_{k+1} = x_k / (H^T 1) * H^T (y / (H x_k)),
/// component-wise, with every sum restricted to valid data entries.
/// Components above the last valid data point receive no information and
/// keep their current value. Strictly positive input stays strictly
/// positive whenever all valid y_i > 0.
ExtinctionProfile em_step(const ExtinctionProfile& x, const TransformedData& y,
                          const AltitudeGrid& grid, Quadrature q = Quadrature::rectangle);

/// Measured-signal context required to evaluate a stopping rule during a
/// solve: the rule maps iterates to predicted signals and compares them
/// against this measurement.
struct StopContext {
    StoppingRule rule;
    LidarSignal measured;
};

/// Full EM solve from the uniform positive initial guess. Every
/// `check_every` iterations the KL value is recorded and, when a stopping
/// context is given, the residual criterion is evaluated; the first
/// iterate satisfying it is returned. Otherwise runs to max_iterations.
std::pair<ExtinctionProfile, SolveReport>
em_solve(const TransformedData& y, const AltitudeGrid& grid, const EmConfig& config,
         const std::optional<StopContext>& stop = std::nullopt);

} // namespace raminv
