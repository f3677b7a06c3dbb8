#pragma once

#include <optional>
#include <utility>

#include "raminv/em.hpp"
#include "raminv/forward_model.hpp"
#include "raminv/solve_report.hpp"
#include "raminv/stopping.hpp"

namespace raminv {

/// Tikhonov regularization with automatic parameter reduction.
struct TikhonovConfig {
    double eta_initial = 1.0;
    double eta_factor = 0.5;   ///< geometric reduction multiplier in (0, 1)
    double eta_min = 1e-12;
    bool non_negative = true;  ///< clamp negative components after solving
};

/// Solves (H^T H + eta I) x = H^T y restricted to valid entries via a
/// dense factorization. With non_negative, negative components are clamped
/// to zero after the solve (a projection, not the constrained argmin).
/// The unprojected solution satisfies the normal equations to 1e-8
/// relative residual.
ExtinctionProfile tikhonov_solve(const TransformedData& y, const AltitudeGrid& grid, double eta,
                                 bool non_negative = false,
                                 Quadrature q = Quadrature::rectangle);

/// Evaluates tikhonov_solve along eta_initial, eta_initial*eta_factor, ...
/// and returns the first solution whose predicted signal satisfies the
/// residual criterion; when none does before eta drops below eta_min, the
/// smallest-eta solution is returned with stopped_by = max_iterations.
/// The selected eta is recorded in the report.
std::pair<ExtinctionProfile, SolveReport>
tikhonov_auto(const TransformedData& y, const AltitudeGrid& grid, const TikhonovConfig& config,
              const StoppingRule& stop, const LidarSignal& measured);

} // namespace raminv
