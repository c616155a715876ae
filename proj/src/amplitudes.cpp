#include "rindler_dicke/amplitudes.hpp"

#include <cmath>
#include <numbers>

namespace rindler_dicke::amplitudes {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

double phi_gamma(double xi) { return std::imag(specfun::log_gamma(Complex(0.0, xi))); }

} // namespace

Complex alpha_pm(Sign sign, const DimensionlessParams& dp) {
    dp.validate();
    const double theta = kinematics::theta_phase(dp);
    const double sgn = (sign == Sign::plus) ? 1.0 : -1.0;
    const Complex lg = specfun::log_gamma(Complex(0.0, sgn * dp.xi));
    return std::exp(Complex(-kPi * dp.xi / 2.0, sgn * theta) + lg);
}

FirstOrderAmplitudes first_order(const DimensionlessParams& dp, double kd1) {
    dp.validate();
    const double theta = kinematics::theta_phase(dp);
    FirstOrderAmplitudes out;
    out.alpha_plus = alpha_pm(Sign::plus, dp);
    out.alpha_minus = alpha_pm(Sign::minus, dp);
    const Complex ekd_p = std::exp(kI * dp.kd);
    const Complex ekd_m = std::exp(-kI * dp.kd);
    const Complex common_l =
        -kI / std::sqrt(2.0) * std::exp(Complex(0.0, theta + kd1)) *
        std::exp(Complex(-kPi * dp.xi / 2.0, 0.0) + specfun::log_gamma(Complex(0.0, dp.xi)));
    const Complex common_r =
        -kI / std::sqrt(2.0) * std::exp(Complex(0.0, -(theta + kd1))) *
        std::exp(Complex(-kPi * dp.xi / 2.0, 0.0) + specfun::log_gamma(Complex(0.0, -dp.xi)));
    out.a_s_left = common_l * (1.0 + ekd_p);
    out.a_a_left = common_l * (1.0 - ekd_p);
    out.a_s_right = common_r * (1.0 + ekd_m);
    out.a_a_right = common_r * (1.0 - ekd_m);
    return out;
}

Complex beta_ll(const DimensionlessParams& dp) {
    dp.validate();
    const double theta = kinematics::theta_phase(dp);
    const double mod = kPi / dp.xi * kinematics::planck_factor(dp.xi);
    return std::polar(mod, 2.0 * (theta + phi_gamma(dp.xi)));
}

Complex beta_rr(const DimensionlessParams& dp) { return std::conj(beta_ll(dp)); }

Complex beta_rl(const DimensionlessParams& dp) {
    dp.validate();
    const double theta = kinematics::theta_phase(dp);
    const Complex s(0.0, dp.xi);
    const Complex h = specfun::hyp1f2(s, 1.0 + s, 1.0 + 2.0 * s,
                                      Complex(dp.kappa * dp.kappa, 0.0));
    const Complex pref =
        std::exp(Complex(-kPi * dp.xi, -2.0 * theta) + specfun::log_gamma(-2.0 * s)) / s;
    return pref * h;
}

SecondOrderAmplitudes second_order(const DimensionlessParams& dp) {
    SecondOrderAmplitudes out;
    out.beta_ll = beta_ll(dp);
    out.beta_rr = beta_rr(dp);
    out.beta_rl = beta_rl(dp);
    out.beta_lr = std::conj(out.beta_rl);
    const Complex s(0.0, dp.xi);
    out.h = specfun::hyp1f2(s, 1.0 + s, 1.0 + 2.0 * s, Complex(dp.kappa * dp.kappa, 0.0));
    out.phi_rl = std::arg(out.beta_rl);
    return out;
}

PairProbabilities pair_probabilities(const DimensionlessParams& dp) {
    dp.validate();
    const double b = kinematics::planck_factor(dp.xi);
    const double c = std::cos(0.5 * dp.kd);
    const double s = std::sin(0.5 * dp.kd);
    return {c * c * b, s * s * b, 0.5 * b};
}

double prob_prefactor(const PhysicalParams& p) {
    p.validate();
    return 2.0 * p.hbar * p.chi * p.chi / (p.nu * p.omega * p.a);
}

double prob_symmetric(const PhysicalParams& p) {
    return prob_prefactor(p) * pair_probabilities(kinematics::to_dimensionless(p)).p_s;
}

double prob_antisymmetric(const PhysicalParams& p) {
    return prob_prefactor(p) * pair_probabilities(kinematics::to_dimensionless(p)).p_a;
}

double prob_single_atom(const PhysicalParams& p) {
    return prob_prefactor(p) * pair_probabilities(kinematics::to_dimensionless(p)).p_single;
}

double prob_one_of_n(int n, const PhysicalParams& p) {
    if (n < 1) throw DomainError("prob_one_of_n: n must be >= 1");
    return static_cast<double>(n) * prob_single_atom(p);
}

std::vector<Complex> build_symmetric_state_n(int n, std::span<const double> kd_offsets,
                                             Direction dir) {
    if (n < 1 || n > 20)
        throw SizeError("build_symmetric_state_n: n must be within [1, 20]");
    if (static_cast<int>(kd_offsets.size()) != n)
        throw SizeError("build_symmetric_state_n: need exactly n phase offsets");
    const double sgn = (dir == Direction::left) ? 1.0 : -1.0;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (const double kd : kd_offsets) coeffs.push_back(std::polar(norm, sgn * kd));
    return coeffs;
}

DoubleExcitation double_excitation_bracket(const DimensionlessParams& dp) {
    dp.validate();
    const SecondOrderAmplitudes so = second_order(dp);
    const double b = kinematics::planck_factor(dp.xi);
    const double ckd = std::cos(dp.kd);
    const double cphi = std::cos(so.phi_rl);
    const double habs2 = std::norm(so.h);
    const double thermal = kPi * dp.xi * b * b;
    const double interference =
        ckd * ckd * cphi * cphi * habs2 / std::expm1(4.0 * kPi * dp.xi);
    const double bracket = thermal - interference;
    return {bracket, bracket, bracket >= 0.0};
}

DoubleExcitation prob_double_excitation(const PhysicalParams& p) {
    p.validate();
    const DimensionlessParams dp = kinematics::to_dimensionless(p);
    DoubleExcitation out = double_excitation_bracket(dp);
    const double w = kinematics::mode_norm_w(p);
    const double w4 = w * w * w * w;
    const double chi4 = p.chi * p.chi * p.chi * p.chi;
    const double pref = 16.0 * kPi * p.c * w4 * chi4 /
                        (p.omega * p.omega * p.omega * p.a);
    out.value = pref * out.bracket;
    return out;
}

DickeDecomposition dicke_decomposition(const PhysicalParams& p) {
    p.validate();
    const DimensionlessParams dp = kinematics::to_dimensionless(p);
    const double k = p.nu / p.c;
    const double w = kinematics::mode_norm_w(p);
    const double g1 = p.chi * w * p.c / p.a;            // first-order scale
    const double g2 = g1 * g1;                           // (chi W c/a)^2
    const FirstOrderAmplitudes fo = first_order(dp, k * p.d1);
    const SecondOrderAmplitudes so = second_order(dp);

    DickeDecomposition d;
    d.amp_ground = {1.0, 0.0};
    d.amp_symmetric_left = g1 * fo.a_s_left;
    d.amp_symmetric_right = g1 * fo.a_s_right;
    d.amp_antisymmetric_left = g1 * fo.a_a_left;
    d.amp_antisymmetric_right = g1 * fo.a_a_right;
    const double two_sqrt2 = 2.0 * std::sqrt(2.0);
    const Complex esum = std::exp(kI * (k * (p.d1 + p.d2)));
    d.amp_doubly_excited_2l = g2 * two_sqrt2 * esum * so.beta_ll;
    d.amp_doubly_excited_2r = g2 * two_sqrt2 * std::conj(esum) * so.beta_rr;
    d.amp_doubly_excited_rl = g2 * (so.beta_rl + so.beta_lr) * std::cos(dp.kd);
    return d;
}

} // namespace rindler_dicke::amplitudes
