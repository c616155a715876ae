#pragma once

#include <complex>

#include "rindler_dicke/errors.hpp"

namespace rindler_dicke::specfun {

using Complex = std::complex<double>;

/// Term cap shared by every series in this module.
inline constexpr int kSeriesCap = 10000;

/// Default relative tolerance for series termination.
inline constexpr double kDefaultTol = 1e-12;

/// Principal-branch log Gamma. exp(log_gamma(z)) == Gamma(z).
/// Lanczos approximation (g = 607/128, 15 terms) for Re z >= 0.5,
/// reflection formula below. Relative accuracy ~1e-14 on the strip
/// |Im z| <= 100. Throws PoleError at z in {0, -1, -2, ...}.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// |Gamma(ix)|^2 = pi / (x sinh(pi x)) for x > 0. Diverges as 1/x^2 for
/// x -> 0+ (no clamp). Throws DomainError for x <= 0.
double gamma_abs_imag_sq(double x);

/// Lower incomplete gamma gamma(s, z) by the alternating power series
///   sum_k (-1)^k z^(k+s) / (k! (k+s)),
/// principal branch of z^s. Throws DomainError if s is a non-positive
/// integer or tol <= 0; NonConvergence past the term cap.
Complex lower_incomplete_gamma(Complex s, Complex z, double tol = kDefaultTol);

/// Gauss 2F1(a, b; c; -1). Requires Re(c - a - b) > 0 (absolute
/// convergence on the unit circle) and c not a non-positive integer.
/// Evaluated through the Pfaff transformation
///   2F1(a, b; c; -1) = 2^{-a} 2F1(a, c - b; c; 1/2),
/// whose series gains a binary digit per term; direct summation at
/// |z| = 1 decays only like k^{Re(a+b-c)-1} and cannot reach tol within
/// the term cap.
Complex hyp2f1_at_minus1(Complex a, Complex b, Complex c, double tol = kDefaultTol);

/// Closed form for 2F1(a, b; 1 + a - b; -1):
///   Gamma(1+a-b) Gamma(1+a/2) / (Gamma(1+a/2-b) Gamma(1+a)),
/// assembled from log_gamma. Propagates PoleError.
Complex kummer_2f1(Complex a, Complex b);

/// Generalized 1F2(a; b1, b2; z), entire in z. Throws DomainError if b1
/// or b2 is a non-positive integer; NonConvergence past the term cap.
Complex hyp1f2(Complex a, Complex b1, Complex b2, Complex z, double tol = kDefaultTol);

} // namespace rindler_dicke::specfun
