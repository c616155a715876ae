#pragma once

#include "rindler_dicke/errors.hpp"

namespace rindler_dicke::kinematics {

/// CODATA 2018 defaults; overridable for natural-unit runs.
inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kHbar = 1.054571817e-34;            // J s
inline constexpr double kBoltzmann = 1.380649e-23;          // J/K

/// SI-unit inputs of the two-atom configuration.
struct PhysicalParams {
    double a = 0.0;      ///< proper acceleration (m/s^2), > 0
    double omega = 0.0;  ///< atomic transition angular frequency (rad/s), > 0
    double nu = 0.0;     ///< field-mode angular frequency (rad/s), > 0
    double chi = 0.0;    ///< atom-field coupling (rad/s), >= 0
    double d1 = 0.0;     ///< coordinate offset of atom 1 (m)
    double d2 = 0.0;     ///< coordinate offset of atom 2 (m)
    double c = kSpeedOfLight;
    double hbar = kHbar;
    double kB = kBoltzmann;

    double d() const { return d2 - d1; }

    /// Throws DomainError unless a, omega, nu, c > 0 and chi >= 0.
    void validate() const;
};

/// The three dimensionless groups plus atom count; these determine every
/// normalized result.
struct DimensionlessParams {
    double xi = 1.0;     ///< omega c / a
    double kappa = 0.1;  ///< nu c / a
    double kd = 0.0;     ///< k (d2 - d1) with k = nu / c (radians)
    int n_atoms = 2;

    void validate() const;
};

struct SpacetimePoint {
    double t; ///< Minkowski time (s)
    double z; ///< Minkowski position (m)
};

/// Hyperbolic trajectory of atom 1 or 2 at proper time tau:
///   t = (c/a) sinh(a tau / c),  z = (c^2/a) cosh(a tau / c) + d_i.
SpacetimePoint rindler_trajectory(double tau, const PhysicalParams& p, int atom_index);

/// Collects xi = omega c / a, kappa = nu c / a, kd = (nu/c)(d2 - d1).
DimensionlessParams to_dimensionless(const PhysicalParams& p);

/// theta = xi ln(1/kappa) = -xi ln(kappa).
double theta_phase(const DimensionlessParams& dp);

/// Unruh temperature T_U = hbar a / (2 pi c k_B), in kelvin.
double unruh_temperature(const PhysicalParams& p);

/// Thermal occupation 1 / (e^{2 pi xi} - 1), evaluated with expm1.
double planck_factor(double xi);

/// Field-mode normalization W = sqrt(hbar / (4 pi c nu)).
double mode_norm_w(const PhysicalParams& p);

} // namespace rindler_dicke::kinematics
