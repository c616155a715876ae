#pragma once

#include <string>
#include <vector>

#include "rindler_dicke/oracle.hpp"

namespace rindler_dicke::verify {

struct GridPoint {
    double xi;
    double kappa;
};

/// The standard oracle-equivalence grid.
std::vector<GridPoint> default_grid();

struct VerifyOptions {
    std::vector<GridPoint> grid = default_grid();
    /// Multiplies every check tolerance; < 1 tightens.
    double tol_scale = 1.0;
    /// When > 0, replaces every check tolerance outright (the CLI --tol
    /// flag; 1e-30 is the documented forced-failure path).
    double tol_override = 0.0;
    oracle::QuadratureConfig quad;

    void validate() const; ///< ConfigError on an empty grid or bad scale
};

struct CheckResult {
    std::string name;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool informational = false; ///< reported, never gates the exit code
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
    std::string render() const;  ///< fixed-width table plus notes
    std::string to_json() const; ///< the same report as a JSON document
};

/// Runs the full identity / oracle-equivalence battery:
/// Gamma modulus + recurrence, Kummer, incomplete-gamma series vs
/// quadrature, the damped-closed-form engine self-test, alpha and beta
/// analytic vs oracle, extrapolation-ladder monotonicity, sum rule,
/// conjugacy (analytic and oracle), interference zeros, thermal law,
/// N-scaling, and the joint-excitation bridge identity with the
/// negative-bracket census.
VerifyReport run(const VerifyOptions& options = {});

} // namespace rindler_dicke::verify
