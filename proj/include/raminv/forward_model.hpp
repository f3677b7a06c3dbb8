#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "raminv/grid.hpp"
#include "raminv/molecular.hpp"

namespace raminv {

/// Quadrature rule used to discretize the integral from 0 to z_i.
///
/// rectangle: left-rectangle rule; the ground segment [0, z_min] is
/// attributed to the first sample with weight z_min, every later sample
/// weighs dz. Keeps the operator lower-triangular with positive entries.
/// trapezoid: trapezoid rule on the grid (the ground segment still uses
/// the first sample); second-order accurate, offered as an alternative.
enum class Quadrature { rectangle, trapezoid };

/// Range-corrected signal model parameters.
struct ForwardModelConfig {
    double C = 1e9;                 ///< system constant (power x efficiency x cross-section)
    double wavelength = 355.0;      ///< channel wavelength label, nanometers
    MolecularModel molecular;       ///< known molecular density profile
    double counts_per_power = 2.5e-3; ///< mean power -> expected photon counts
    double sigma_floor_rel = 1e-3;  ///< noise-free sigma = sigma_floor_rel * max P
    Quadrature quadrature = Quadrature::rectangle;
};

/// Measured or simulated signal power per altitude with uncertainties.
struct LidarSignal {
    AltitudeGrid grid;
    std::vector<double> P;      ///< mean power, >= 0
    std::vector<double> sigma;  ///< per-altitude uncertainty, > 0 where P is used
    double wavelength = 355.0;  ///< nanometers

    std::size_t size() const { return P.size(); }
};

/// Log-transformed data y (dimensionless optical depth) with a validity
/// mask; invalid entries never enter a solver sum.
struct TransformedData {
    AltitudeGrid grid;
    std::vector<double> y;
    std::vector<std::uint8_t> valid;

    std::size_t size() const { return y.size(); }
    std::size_t valid_count() const;
};

/// Extinction coefficient per altitude, in 1/m. Solver outputs under the
/// positivity constraint keep alpha >= 0. band_low/band_high are optional
/// per-altitude confidence bounds (empty when absent).
struct ExtinctionProfile {
    AltitudeGrid grid;
    std::vector<double> alpha;
    std::vector<double> band_low;
    std::vector<double> band_high;

    std::size_t size() const { return alpha.size(); }
    bool has_band() const { return !band_low.empty() && !band_high.empty(); }
};

/// Discrete integral operator H with (Hx)(z_i) ~ integral of x from 0 to
/// z_i, and its adjoint. Both apply in O(n) through running sums; the
/// dense n x n matrix is never materialized.
///
/// An optional validity mask restricts the data side: masked rows are
/// treated as removed from the operator, so the adjoint sums only over
/// valid rows.
class CumulativeIntegralOperator {
public:
    CumulativeIntegralOperator(const AltitudeGrid& grid, Quadrature q = Quadrature::rectangle);

    std::size_t size() const { return grid_.n; }
    const AltitudeGrid& grid() const { return grid_; }
    Quadrature quadrature() const { return quadrature_; }

    /// out_j = (Hx)_j. Rows are computed for all j; callers honoring a
    /// mask simply ignore masked rows.
    void apply(const std::vector<double>& x, std::vector<double>& out) const;

    /// out_i = (H^T v)_i, summing rows j >= i. When `valid` is non-null,
    /// only rows with valid[j] != 0 contribute.
    void apply_adjoint(const std::vector<double>& v, std::vector<double>& out,
                       const std::vector<std::uint8_t>* valid = nullptr) const;

    /// Column sums of H restricted to valid rows, i.e. H^T applied to the
    /// indicator of the valid set. Needed by multiplicative solvers.
    std::vector<double> adjoint_row_indicator(const std::vector<std::uint8_t>* valid = nullptr) const;

    /// Explicit matrix entry H(row, col); used for dense assembly at small
    /// n and by the normal-equation solvers.
    double entry(std::size_t row, std::size_t col) const;

private:
    AltitudeGrid grid_;
    Quadrature quadrature_;
};

/// (Hx)_i for x on `grid` using the selected quadrature; O(n).
std::vector<double> apply_forward(const AltitudeGrid& grid, const ExtinctionProfile& x,
                                  Quadrature q = Quadrature::rectangle);

/// (H^T v)_i on `grid`; O(n).
std::vector<double> apply_adjoint(const AltitudeGrid& grid, const std::vector<double>& v,
                                  Quadrature q = Quadrature::rectangle);

/// y_i = -log(P_i z_i^2 / (C rho(z_i))). Entries where P_i <= 0 (or the
/// log argument is otherwise unusable) are masked invalid and excluded
/// from every downstream sum; the effective altitude set shrinks.
/// Throws DataError if no point survives.
TransformedData transform_signal(const LidarSignal& signal, const ForwardModelConfig& config);

/// Noise selector for synthetic signal generation.
struct NoiseSpec {
    enum class Kind { none, poisson } kind = Kind::none;
    std::uint64_t seed = 0;

    static NoiseSpec none() { return {Kind::none, 0}; }
    static NoiseSpec poisson(std::uint64_t seed) { return {Kind::poisson, seed}; }
};

/// Simulates the Raman channel: exact P_i = (C/z_i^2) rho(z_i) exp(-(Hx)_i).
/// With Poisson noise the expected counts are lambda_i = counts_per_power * P_i,
/// sampled counts k_i ~ Poisson(lambda_i), and the returned signal is
/// P_i = k_i / counts_per_power with sigma_i = sqrt(max(k_i, 1)) / counts_per_power.
/// Without noise, sigma_i = sigma_floor_rel * max_j P_j.
LidarSignal synthesize_signal(const ExtinctionProfile& profile, const ForwardModelConfig& config,
                              const NoiseSpec& noise = NoiseSpec::none());

/// Delta-comb test profile: alpha_i = peak_value when i % period_points == 0,
/// zero elsewhere.
ExtinctionProfile make_comb_profile(const AltitudeGrid& grid, std::size_t period_points,
                                    double peak_value);

} // namespace raminv
