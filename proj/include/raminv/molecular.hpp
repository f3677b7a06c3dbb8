#pragma once

#include <cstddef>
#include <vector>

namespace raminv {

/// Molecular number density of the atmosphere, assumed known.
///
/// Two forms are supported:
///  - analytic exponential: rho(z) = rho_0 * exp(-(z - z_ref)/scale_height)
///  - tabulated (z, rho) samples with linear interpolation, no extrapolation.
///
/// Units are arbitrary but must be used consistently with the system
/// constant C of the forward model.
class MolecularModel {
public:
    /// Exponential atmosphere. Default scale height 8000 m approximates a
    /// standard atmosphere; rho_0 is the density at z_ref.
    static MolecularModel exponential(double rho_0 = 1.0, double scale_height = 8000.0,
                                      double z_ref = 0.0);

    /// Tabulated density curve; z strictly increasing, rho > 0 everywhere.
    static MolecularModel tabulated(std::vector<double> z, std::vector<double> rho);

    MolecularModel() : MolecularModel(exponential()) {}

    /// Density at altitude z (> 0). Tabulated models throw ConfigError for
    /// z outside the table range.
    double density(double z) const;

    bool is_tabulated() const { return tabulated_; }

private:
    MolecularModel(bool tab, double rho0, double h, double zref,
                   std::vector<double> tz, std::vector<double> trho)
        : tabulated_(tab), rho_0_(rho0), scale_height_(h), z_ref_(zref),
          table_z_(std::move(tz)), table_rho_(std::move(trho)) {}

    bool tabulated_ = false;
    double rho_0_ = 1.0;
    double scale_height_ = 8000.0;
    double z_ref_ = 0.0;
    std::vector<double> table_z_;
    std::vector<double> table_rho_;
};

/// Free-function form of MolecularModel::density.
double molecular_density(const MolecularModel& model, double z);

} // namespace raminv
