#include "rindler_dicke/kinematics.hpp"

#include <cmath>
#include <numbers>

namespace rindler_dicke::kinematics {

namespace {
constexpr double kPi = std::numbers::pi;
}

void PhysicalParams::validate() const {
    if (!(a > 0.0)) throw DomainError("PhysicalParams: acceleration a must be > 0");
    if (!(omega > 0.0)) throw DomainError("PhysicalParams: omega must be > 0");
    if (!(nu > 0.0)) throw DomainError("PhysicalParams: nu must be > 0");
    if (!(chi >= 0.0)) throw DomainError("PhysicalParams: chi must be >= 0");
    if (!(c > 0.0)) throw DomainError("PhysicalParams: c must be > 0");
    if (!(hbar > 0.0) || !(kB > 0.0))
        throw DomainError("PhysicalParams: hbar and kB must be > 0");
}

void DimensionlessParams::validate() const {
    if (!(xi > 0.0)) throw DomainError("DimensionlessParams: xi must be > 0");
    if (!(kappa > 0.0)) throw DomainError("DimensionlessParams: kappa must be > 0");
    if (n_atoms < 1) throw DomainError("DimensionlessParams: n_atoms must be >= 1");
    if (!std::isfinite(kd)) throw DomainError("DimensionlessParams: kd must be finite");
}

SpacetimePoint rindler_trajectory(double tau, const PhysicalParams& p, int atom_index) {
    p.validate();
    if (atom_index != 1 && atom_index != 2)
        throw DomainError("rindler_trajectory: atom_index must be 1 or 2");
    const double di = (atom_index == 1) ? p.d1 : p.d2;
    const double u = p.a * tau / p.c;
    return {p.c / p.a * std::sinh(u), p.c * p.c / p.a * std::cosh(u) + di};
}

DimensionlessParams to_dimensionless(const PhysicalParams& p) {
    p.validate();
    DimensionlessParams dp;
    dp.xi = p.omega * p.c / p.a;
    dp.kappa = p.nu * p.c / p.a;
    dp.kd = p.nu / p.c * (p.d2 - p.d1);
    dp.n_atoms = 2;
    return dp;
}

double theta_phase(const DimensionlessParams& dp) {
    dp.validate();
    return -dp.xi * std::log(dp.kappa);
}

double unruh_temperature(const PhysicalParams& p) {
    p.validate();
    return p.hbar * p.a / (2.0 * kPi * p.c * p.kB);
}

double planck_factor(double xi) {
    if (!(xi > 0.0)) throw DomainError("planck_factor: requires xi > 0");
    return 1.0 / std::expm1(2.0 * kPi * xi);
}

double mode_norm_w(const PhysicalParams& p) {
    p.validate();
    return std::sqrt(p.hbar / (4.0 * kPi * p.c * p.nu));
}

} // namespace rindler_dicke::kinematics
