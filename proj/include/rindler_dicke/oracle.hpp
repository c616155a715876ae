#pragma once

#include <complex>
#include <vector>

#include "rindler_dicke/errors.hpp"
#include "rindler_dicke/kinematics.hpp"

namespace rindler_dicke::oracle {

using Complex = std::complex<double>;
using kinematics::DimensionlessParams;

/// Controls for the damped-limit quadrature engine.
struct QuadratureConfig {
    /// Damping used by single-eps evaluations (engine self-tests).
    double damping_eps = 0.05;
    /// Decreasing ladder for the eps -> 0 Richardson extrapolation. Seven
    /// halving rungs: five are not enough to hold the extrapolation error
    /// below 1e-6 relative once xi reaches 4 (derivatives of the damped
    /// value grow like |xi|^k).
    std::vector<double> eps_ladder = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
    /// Absolute tolerance: per-integral quadrature target and the ceiling
    /// for the extrapolation residual.
    double abs_tol = 1e-9;
    int max_subdivisions = 2000;
    /// Half-width of the log-coordinate integration window; sets the
    /// analytic-boundary cutoffs and the switch to asymptotic tails.
    double tau_window = 30.0;

    void validate() const;
};

/// Value plus the error bookkeeping of one extrapolated evaluation.
struct QuadratureOutcome {
    Complex value;
    double residual = 0.0;        ///< last Richardson correction magnitude
    double tail_budget = 0.0;     ///< accumulated analytic truncation bounds
    std::vector<Complex> ladder_values;
};

enum class Sign { plus, minus };
enum class BetaChannel { ll, rr, rl };

/// First-order amplitude by quadrature of its defining proper-time
/// integral, in the same dimensionless convention as amplitudes::alpha_pm.
///
/// Each damped integrand e^{(i-eps)x} x^{+-i xi - 1} is integrated on the
/// rotated ray x -> +-i t, which turns the oscillation into e^{-t} decay
/// and pulls the e^{-pi xi/2} smallness out as an exact prefactor; on the
/// oscillatory axis the cancellation to e^{-pi xi} sits below the double
/// roundoff floor already at xi = 4. The rotation is exact for every
/// eps > 0 and the eps ladder is extrapolated to zero as usual.
Complex alpha_numeric(Sign sign, const DimensionlessParams& dp,
                      const QuadratureConfig& cfg = {});
QuadratureOutcome alpha_numeric_full(Sign sign, const DimensionlessParams& dp,
                                     const QuadratureConfig& cfg = {});

/// Second-order amplitude by quadrature of the ordered double integral
/// (inner variable strictly earlier), damped by e^{-eps(x+y)} and
/// extrapolated. Channel rl integrates the mixed-channel integrand with
/// the right-mover factor at the later (outer) time; its value is real
/// and equals beta_rl + conj(beta_rl).
Complex beta_numeric(BetaChannel ch, const DimensionlessParams& dp,
                     const QuadratureConfig& cfg = {});
QuadratureOutcome beta_numeric_full(BetaChannel ch, const DimensionlessParams& dp,
                                    const QuadratureConfig& cfg = {});

/// gamma(s, z) = int_0^z e^{-u} u^{s-1} du by adaptive quadrature with an
/// analytic small-u boundary term (needed once Re s <= 0). Reference for
/// specfun::lower_incomplete_gamma.
Complex incomplete_gamma_numeric(Complex s, double z,
                                 const QuadratureConfig& cfg = {});

/// int_0^inf e^{ix - eps x} x^{s-1} dx for fixed eps, through the same
/// rotated engine. Equals Gamma(s) (eps - i)^{-s}; the engine self-test.
/// eps <= 0 selects cfg.damping_eps.
Complex damped_power_integral(Complex s, double eps = 0.0,
                              const QuadratureConfig& cfg = {});

namespace detail {
/// Mixed-channel ordered integral with the right-mover factor at the
/// earlier (inner) time instead; together with the rl channel it tiles
/// the plane: rl + rl_swapped = alpha_+ * alpha_- (per damping eps).
Complex beta_rl_swapped(const DimensionlessParams& dp,
                        const QuadratureConfig& cfg = {});
} // namespace detail

} // namespace rindler_dicke::oracle
