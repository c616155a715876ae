#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rindler_dicke/kinematics.hpp"
#include "rindler_dicke/specfun.hpp"

namespace rindler_dicke::amplitudes {

using specfun::Complex;
using kinematics::DimensionlessParams;
using kinematics::PhysicalParams;

enum class Sign { plus, minus };
enum class Direction { left, right };

/// First-order excitation amplitude in units of c/a:
///   alpha_+- = e^{+-i theta} e^{-pi xi/2} Gamma(+-i xi),
/// with theta = -xi ln(kappa). The caller multiplies by c/a for
/// dimensional output.
Complex alpha_pm(Sign sign, const DimensionlessParams& dp);

/// First-order amplitudes stripped of the chi W c/a scale. The symmetric /
/// antisymmetric channel amplitudes carry the (1 +- e^{+-i kd}) structure;
/// kd1 is a global-phase offset of atom 1 (irrelevant to probabilities).
struct FirstOrderAmplitudes {
    Complex alpha_plus;
    Complex alpha_minus;
    Complex a_s_left, a_s_right;
    Complex a_a_left, a_a_right;
};
FirstOrderAmplitudes first_order(const DimensionlessParams& dp, double kd1 = 0.0);

/// Second-order amplitudes in units of (c/a)^2.
///
/// The diagonal channels carry the phase of the defining ordered double
/// integral, beta_LL = (pi/xi) e^{+2i(theta+phi)} / (e^{2 pi xi}-1) with
/// phi = arg Gamma(i xi) (quadrature-confirmed sign; see the README notes
/// on conventions). The mixed channel is
///   beta_RL = (1/(i xi)) e^{-2i theta} e^{-pi xi} Gamma(-2i xi) H,
///   H = 1F2[i xi; 1 + i xi, 1 + 2i xi; kappa^2],
/// and beta_LR = conj(beta_RL); their sum is the full one-left-one-right
/// ordered integral (a real number).
struct SecondOrderAmplitudes {
    Complex beta_ll;
    Complex beta_rr;
    Complex beta_rl;
    Complex beta_lr;
    Complex h;        ///< the 1F2 factor inside beta_rl
    double phi_rl;    ///< arg(beta_rl)
};

Complex beta_ll(const DimensionlessParams& dp);
Complex beta_rr(const DimensionlessParams& dp);
Complex beta_rl(const DimensionlessParams& dp);
SecondOrderAmplitudes second_order(const DimensionlessParams& dp);

/// Dimensionless pair-excitation probabilities (SI prefactor stripped):
/// p_s = cos^2(kd/2) B, p_a = sin^2(kd/2) B, p_single = B/2 with
/// B = planck_factor(xi).
struct PairProbabilities {
    double p_s;
    double p_a;
    double p_single;
};
PairProbabilities pair_probabilities(const DimensionlessParams& dp);

/// Common probability prefactor 8 pi c chi^2 W^2 / (omega a) = 2 hbar
/// chi^2 / (nu omega a).
double prob_prefactor(const PhysicalParams& p);

double prob_symmetric(const PhysicalParams& p);
double prob_antisymmetric(const PhysicalParams& p);
double prob_single_atom(const PhysicalParams& p);

/// N-atom symmetric-state scaling: Pr(1 excited of n) = n Pr(lone atom).
double prob_one_of_n(int n, const PhysicalParams& p);

/// Coefficients e^{+-i kd_j} / sqrt(n) of the n-atom symmetric state
/// (sign + for left-moving, - for right-moving photon). Enumeration bound
/// n <= 20; throws SizeError beyond it.
std::vector<Complex> build_symmetric_state_n(int n, std::span<const double> kd_offsets,
                                             Direction dir);

/// Joint excitation probability:
///   P = 16 pi c W^4 chi^4 / (omega^3 a) * bracket,
///   bracket = pi xi / (e^{2 pi xi}-1)^2
///           - cos^2(kd) cos^2(phi_RL) |H|^2 / (e^{4 pi xi}-1).
/// The bracket can go negative in corners of parameter space; the value is
/// returned with a validity flag instead of being clamped.
struct DoubleExcitation {
    double value;
    double bracket;   ///< dimensionless bracket
    bool valid;       ///< false when the bracket is negative
};
DoubleExcitation prob_double_excitation(const PhysicalParams& p);

/// Same bracket without the SI prefactor (used by the dimensionless CLI mode).
DoubleExcitation double_excitation_bracket(const DimensionlessParams& dp);

/// Amplitudes of the final state over the Dicke basis {|g>, |s>, |a>, |e>}
/// with their photon-sector labels, in SI normalization (chi W c/a scales
/// applied). At chi = 0 only amp_ground survives.
struct DickeDecomposition {
    Complex amp_ground;
    Complex amp_symmetric_left, amp_symmetric_right;
    Complex amp_antisymmetric_left, amp_antisymmetric_right;
    Complex amp_doubly_excited_2l, amp_doubly_excited_2r, amp_doubly_excited_rl;
};
DickeDecomposition dicke_decomposition(const PhysicalParams& p);

} // namespace rindler_dicke::amplitudes
