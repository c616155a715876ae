#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rindler_dicke/kinematics.hpp"
#include "test_util.hpp"

using namespace rindler_dicke;
using test_util::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

kinematics::PhysicalParams fig2() {
    kinematics::PhysicalParams p;
    p.omega = 1e9;
    p.nu = 1e8;
    p.chi = 1e7;
    p.a = p.omega * p.c;
    return p;
}
} // namespace

TEST_CASE("rindler trajectory: origin, parity, hyperbola, proper velocity") {
    auto p = fig2();
    p.d1 = 3.0;
    p.d2 = 7.5;
    const auto at0 = kinematics::rindler_trajectory(0.0, p, 1);
    CHECK(at0.t == 0.0);
    CHECK(rel_err(at0.z, p.c * p.c / p.a + p.d1) < 1e-15);

    const double tau = 2.3 * p.c / p.a;
    const auto fwd = kinematics::rindler_trajectory(tau, p, 2);
    const auto bwd = kinematics::rindler_trajectory(-tau, p, 2);
    CHECK(fwd.t == -bwd.t);
    CHECK(fwd.z == bwd.z);

    // (z - d)^2 - (ct)^2 subtracts numbers of size cosh^2(u), so rounding in
    // the stored coordinates is amplified by cosh(2u); verify at 1e-12 times
    // that condition number over tau in [-10, 10] c/a
    const double r2 = std::pow(p.c * p.c / p.a, 2);
    for (int i = 0; i <= 40; ++i) {
        const double u = -10.0 + 0.5 * i;
        const auto pt = kinematics::rindler_trajectory(u * p.c / p.a, p, 1);
        const double inv = std::pow(pt.z - p.d1, 2) - std::pow(p.c * pt.t, 2);
        CHECK(rel_err(inv, r2) < 1e-12 * std::max(1.0, std::cosh(2.0 * u)));
        if (std::abs(u) <= 3.0) CHECK(rel_err(inv, r2) < 1e-12);
    }

    // (dt/dtau)^2 - (dz/dtau)^2 / c^2 = 1 by central differences
    const double h = 1e-6 * p.c / p.a;
    for (const double t0 : {-3.0, 0.4, 5.0}) {
        const double tt = t0 * p.c / p.a;
        const auto plus = kinematics::rindler_trajectory(tt + h, p, 1);
        const auto minus = kinematics::rindler_trajectory(tt - h, p, 1);
        const double dt = (plus.t - minus.t) / (2.0 * h);
        const double dz = (plus.z - minus.z) / (2.0 * h);
        CHECK(rel_err(dt * dt - dz * dz / (p.c * p.c), 1.0) < 1e-6);
    }
    CHECK_THROWS_AS(kinematics::rindler_trajectory(0.0, p, 3), DomainError);
}

TEST_CASE("to_dimensionless collects the parameter groups") {
    auto p = fig2();
    const auto dp = kinematics::to_dimensionless(p);
    CHECK(rel_err(dp.xi, 1.0) < 1e-15);
    CHECK(rel_err(dp.kappa, 0.1) < 1e-15);
    CHECK(dp.kd == 0.0);

    p.d2 = 4.0;
    const auto dp2 = kinematics::to_dimensionless(p);
    CHECK(rel_err(dp2.kd, p.nu / p.c * 4.0) < 1e-15);

    auto doubled = p;
    doubled.a *= 2.0;
    const auto dpd = kinematics::to_dimensionless(doubled);
    CHECK(rel_err(dpd.xi, dp2.xi / 2.0) < 1e-15);
    CHECK(rel_err(dpd.kappa, dp2.kappa / 2.0) < 1e-15);

    p.a = -1.0;
    CHECK_THROWS_AS(kinematics::to_dimensionless(p), DomainError);
    p.a = 1.0;
    p.omega = 0.0;
    CHECK_THROWS_AS(kinematics::to_dimensionless(p), DomainError);
}

TEST_CASE("theta phase") {
    CHECK(kinematics::theta_phase({1.0, 1.0, 0.0, 2}) == 0.0);
    CHECK(rel_err(kinematics::theta_phase({1.0, 0.1, 0.0, 2}), 2.30258509299404568) < 1e-15);
    CHECK(rel_err(kinematics::theta_phase({2.0, std::exp(1.0), 0.0, 2}), -2.0) < 1e-15);
}

TEST_CASE("unruh temperature") {
    auto p = fig2();
    p.a = 2.466e20;
    CHECK(rel_err(kinematics::unruh_temperature(p), 0.999966334708973667) < 1e-12);
    auto p2 = p;
    p2.a *= 2.0;
    CHECK(rel_err(kinematics::unruh_temperature(p2), 2.0 * kinematics::unruh_temperature(p)) <
          1e-15);
    // Planck exponent consistency: hbar omega / (kB T_U) = 2 pi xi
    const auto dp = kinematics::to_dimensionless(p);
    const double ratio = p.hbar * p.omega / (p.kB * kinematics::unruh_temperature(p));
    CHECK(rel_err(ratio, 2.0 * kPi * dp.xi) < 1e-12);
}

TEST_CASE("planck factor") {
    CHECK(rel_err(kinematics::planck_factor(1.0), 0.0018709365986606441) < 1e-13);
    CHECK(rel_err(kinematics::planck_factor(5.0), 2.27110106832414542e-14) < 1e-12);
    CHECK(rel_err(kinematics::planck_factor(1e-8), 1.0 / (2.0 * kPi * 1e-8)) < 1e-6);
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double xi = 1e-6 * std::pow(3e7, i / 60.0); // up to 30
        worst = std::max(worst,
                         rel_err(kinematics::planck_factor(xi) * std::expm1(2.0 * kPi * xi), 1.0));
    }
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(kinematics::planck_factor(0.0), DomainError);
}

TEST_CASE("mode normalization W") {
    auto p = fig2();
    const double w = kinematics::mode_norm_w(p);
    CHECK(rel_err(w, 1.67310345842160621e-26) < 1e-13);
    CHECK(rel_err(w * w, p.hbar / (4.0 * kPi * p.c * p.nu)) < 1e-15);
    auto p4 = p;
    p4.nu *= 4.0;
    CHECK(rel_err(kinematics::mode_norm_w(p4), w / 2.0) < 1e-15);
    // prefactor identity 8 pi c chi^2 W^2 / (omega a) = 2 hbar chi^2 / (nu omega a)
    const double lhs = 8.0 * kPi * p.c * p.chi * p.chi * w * w / (p.omega * p.a);
    const double rhs = 2.0 * p.hbar * p.chi * p.chi / (p.nu * p.omega * p.a);
    CHECK(rel_err(lhs, rhs) < 1e-14);
}
