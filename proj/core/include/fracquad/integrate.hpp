#pragma once

#include <functional>

#include "fracquad/errors.hpp"

namespace fracquad {

/// Tolerances for adaptive quadrature. A panel is accepted once its local
/// error estimate drops below its share of max(abs_tol, rel_tol * |I|).
struct IntegrationOptions {
    double abs_tol = 1e-14;
    double rel_tol = 1e-13;
    int max_depth = 60;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
/// Endpoints are never evaluated (open nodes), so integrable endpoint
/// singularities converge, just slowly; remove known algebraic endpoint
/// behavior with integrate_power_endpoints instead.
/// Throws ToleranceError (carrying the achieved estimate) when the target
/// cannot be met within max_depth.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const IntegrationOptions& opt = {});

/// Same, but returns the achieved error estimate instead of only throwing.
IntegrationResult integrate_adaptive_full(const std::function<double(double)>& f, double a,
                                          double b, const IntegrationOptions& opt = {});

/// Integrate f over [a, b] where f behaves like (t-a)^p near a and like
/// (b-t)^q near b with p, q >= 0. Fractional exponents are removed
/// analytically by the substitution t = a + u^{1/(1+p)} (mirrored on the
/// right); integer exponents need no treatment. The interval is split at the
/// midpoint when both endpoints carry fractional behavior.
double integrate_power_endpoints(const std::function<double(double)>& f, double a, double b,
                                 double left_exponent, double right_exponent,
                                 const IntegrationOptions& opt = {});

} // namespace fracquad
