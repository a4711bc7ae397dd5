#pragma once

#include <complex>
#include <vector>

#include "fracquad/errors.hpp"

namespace fracquad {

/// Gamma function for x > 0, relative accuracy ~1e-15 up to the double
/// overflow limit. Throws DomainError for x <= 0 and Error on overflow
/// (x > 171.62).
double gamma(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// 1/Gamma(x) for any real x (zero at the poles x = 0, -1, -2, ...).
double reciprocal_gamma(double x);

/// Euler beta B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0,
/// evaluated in log space so large arguments do not overflow.
double beta(double a, double b);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z), series form
///   E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
/// Requires alpha > 0 and |z| <= 50; terms are accumulated in log magnitude
/// so large |z| cannot overflow. Truncates once a term falls below
/// 1e-16 times the running sum; throws ConvergenceError if 300 terms are
/// not enough.
std::complex<double> mittag_leffler(double alpha, double beta, std::complex<double> z);

/// Left Caputo derivative of order alpha in (0,1] of sin(freq * t) at t > 0,
/// via the Mittag-Leffler representation
///   -(i/2)(i freq) t^{1-alpha} (E_{1,2-alpha}(i freq t) + E_{1,2-alpha}(-i freq t)).
/// For alpha == 1 this reduces to freq*cos(freq*t). The conjugate pair must
/// cancel the imaginary part; a residue above 1e-12 throws Error.
double caputo_sin(double freq, double alpha, double t);

enum class ChebyshevKind { first = 1, second = 2 };

/// Roots of the Chebyshev polynomial (first kind T_n or second kind U_n) of
/// the given degree, mapped affinely from [-1,1] onto [a,b]. Returned
/// strictly ascending, strictly inside (a,b), exactly symmetric about the
/// interval midpoint.
std::vector<double> chebyshev_roots(ChebyshevKind kind, int degree, double a, double b);

/// Gauss hypergeometric 2F1(a, b; c; z) by its power series for |z| < 1,
/// plus the Gauss summation value at z = 1 when c - a - b > 0. Intended for
/// oracle/cross-check use.
double gauss_2f1(double a, double b, double c, double z);

} // namespace fracquad
