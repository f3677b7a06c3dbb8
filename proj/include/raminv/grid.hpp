#pragma once

#include <cstddef>
#include <vector>

namespace raminv {

/// Uniformly sampled altitude grid, z_i = z_min + i*dz for i = 0..n-1.
///
/// z_min must be strictly positive: signals carry a 1/z^2 range factor,
/// so z = 0 is never a valid sample.
struct AltitudeGrid {
    double z_min = 0.0;
    double z_max = 0.0;
    double dz = 0.0;
    std::size_t n = 0;

    double z(std::size_t i) const { return z_min + static_cast<double>(i) * dz; }

    std::vector<double> altitudes() const;

    /// True if both grids describe the same sampling within relative
    /// tolerance `tol` on z_min and dz.
    bool same_as(const AltitudeGrid& other, double tol = 1e-9) const;
};

/// Builds a uniform grid covering [z_min, z_max] with spacing dz.
/// (z_max - z_min) must be an integer multiple of dz within a relative
/// tolerance of 1e-9.
AltitudeGrid build_grid(double z_min, double z_max, double dz);

/// Constructs a grid directly from strictly increasing, uniformly spaced
/// altitude samples (as read from a file). Throws DataError naming the
/// first offending interval when spacing deviates by more than `rel_tol`.
AltitudeGrid grid_from_altitudes(const std::vector<double>& z, double rel_tol = 1e-6);

} // namespace raminv
