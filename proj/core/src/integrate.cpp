#include "fracquad/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace fracquad {
namespace {

// Gauss-Kronrod (7,15) abscissae and weights on [-1,1] (QUADPACK dqk15).
// xgk holds the positive half; even indices are the Kronrod-only points,
// odd indices the embedded 7-point Gauss points.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod;
    double err;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }
    result_kronrod *= half;
    result_gauss *= half;
    return {result_kronrod, std::abs(result_kronrod - result_gauss)};
}

struct AdaptiveState {
    const std::function<double(double)>& f;
    int max_depth;
    double value = 0.0;
    double err = 0.0;
};

void adapt(AdaptiveState& st, double a, double b, double tol, int depth) {
    const PanelEstimate p = gk15(st.f, a, b);
    if (p.err <= tol || depth >= st.max_depth) {
        st.value += p.kronrod;
        st.err += p.err;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(st, a, mid, 0.5 * tol, depth + 1);
    adapt(st, mid, b, 0.5 * tol, depth + 1);
}

} // namespace

IntegrationResult integrate_adaptive_full(const std::function<double(double)>& f, double a,
                                          double b, const IntegrationOptions& opt) {
    if (!(a <= b)) throw DomainError("integrate_adaptive: requires a <= b");
    if (a == b) return {0.0, 0.0};

    // One coarse pass fixes the absolute target for the refinement below;
    // rel_tol is measured against the coarse magnitude.
    const PanelEstimate coarse = gk15(f, a, b);
    const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(coarse.kronrod));

    AdaptiveState st{f, opt.max_depth};
    adapt(st, a, b, target, 0);

    if (st.err > target)
        throw ToleranceError("integrate_adaptive: tolerance not met (achieved " +
                                 std::to_string(st.err) + ")",
                             st.err);
    return {st.value, st.err};
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const IntegrationOptions& opt) {
    return integrate_adaptive_full(f, a, b, opt).value;
}

namespace {

bool is_integer(double x) { return x == std::floor(x); }

// ∫_a^c f dt with f ~ (t-a)^p near a: substitute t = a + u^{1/(1+p)} so the
// transformed integrand (1/(1+p)) u^{1/(1+p)-1} f(a + u^{1/(1+p)}) is bounded.
double left_substituted(const std::function<double(double)>& f, double a, double c, double p,
                        const IntegrationOptions& opt) {
    const double k = 1.0 + p;
    const double sigma = 1.0 / k;
    const double upper = std::pow(c - a, k);
    auto g = [&](double u) {
        const double t = a + std::pow(u, sigma);
        return sigma * std::pow(u, sigma - 1.0) * f(t);
    };
    return integrate_adaptive(g, 0.0, upper, opt);
}

double right_substituted(const std::function<double(double)>& f, double c, double b, double q,
                         const IntegrationOptions& opt) {
    const double k = 1.0 + q;
    const double sigma = 1.0 / k;
    const double upper = std::pow(b - c, k);
    auto g = [&](double u) {
        const double t = b - std::pow(u, sigma);
        return sigma * std::pow(u, sigma - 1.0) * f(t);
    };
    return integrate_adaptive(g, 0.0, upper, opt);
}

} // namespace

double integrate_power_endpoints(const std::function<double(double)>& f, double a, double b,
                                 double left_exponent, double right_exponent,
                                 const IntegrationOptions& opt) {
    if (!(a <= b)) throw DomainError("integrate_power_endpoints: requires a <= b");
    if (left_exponent < 0.0 || right_exponent < 0.0)
        throw DomainError("integrate_power_endpoints: exponents must be >= 0");
    if (a == b) return 0.0;

    const bool left = !is_integer(left_exponent);
    const bool right = !is_integer(right_exponent);
    if (!left && !right) return integrate_adaptive(f, a, b, opt);
    if (left && right) {
        const double mid = 0.5 * (a + b);
        return left_substituted(f, a, mid, left_exponent, opt) +
               right_substituted(f, mid, b, right_exponent, opt);
    }
    if (left) return left_substituted(f, a, b, left_exponent, opt);
    return right_substituted(f, a, b, right_exponent, opt);
}

} // namespace fracquad
