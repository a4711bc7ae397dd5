#include "fracquad/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace fracquad {

double fractional_lagrange(std::span<const double> nodes, double lambda, int j, double t) {
    const int n = static_cast<int>(nodes.size());
    if (j < 0 || j >= n) throw DomainError("fractional_lagrange: index out of range");
    const auto to_y = [lambda](double x) {
        if (lambda == 1.0) return x;
        if (x < 0.0) throw DomainError("fractional_lagrange: t^lambda needs t >= 0");
        return std::pow(x, lambda);
    };
    const double y = to_y(t);
    const double yj = to_y(nodes[j]);
    double prod = 1.0;
    for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const double yi = to_y(nodes[i]);
        prod *= (y - yi) / (yj - yi);
    }
    return prod;
}

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               double lambda, WeightFunction w, int exactness_degree,
                               double mass)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      lambda_(lambda),
      weight_(std::move(w)),
      exactness_degree_(exactness_degree),
      mass_(mass) {}

QuadratureRule QuadratureRule::interpolatory(std::vector<double> nodes, double lambda,
                                             WeightFunction w) {
    if (nodes.empty()) throw DomainError("QuadratureRule: empty node list");
    if (!(lambda > 0.0) || lambda > 1.0)
        throw DomainError("QuadratureRule: lambda must lie in (0, 1]");
    if (lambda != 1.0 && w.a() < 0.0)
        throw DomainError("QuadratureRule: weight domain must satisfy a >= 0 for lambda < 1");
    std::sort(nodes.begin(), nodes.end());
    const double span_ab = w.b() - w.a();
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < w.a() || nodes[i] > w.b())
            throw DomainError("QuadratureRule: node outside the weight's domain");
        if (i > 0 && !(nodes[i] - nodes[i - 1] > 1e-12 * span_ab))
            throw DomainError("QuadratureRule: coincident nodes");
    }

    // Compute w_j = integral(h_j w) in y = t^lambda space, where h_j is a
    // classical polynomial and the transformed weight carries the declared
    // endpoint exponents (plus the Jacobian exponent when a = 0).
    const int n = static_cast<int>(nodes.size());
    std::vector<double> ynodes(n);
    for (int i = 0; i < n; ++i)
        ynodes[i] = (lambda == 1.0) ? nodes[i] : std::pow(nodes[i], lambda);

    const double inv = 1.0 / lambda;
    const double ya = (lambda == 1.0) ? w.a() : std::pow(w.a(), lambda);
    const double yb = (lambda == 1.0) ? w.b() : std::pow(w.b(), lambda);
    const double left_exp = (lambda != 1.0 && w.a() == 0.0)
                                ? (w.left_exponent() + 1.0) * inv - 1.0
                                : w.left_exponent();
    const double right_exp = w.right_exponent();

    std::vector<double> weights(n);
    const IntegrationOptions opt{1e-14, 1e-13, 60};
    for (int j = 0; j < n; ++j) {
        auto integrand = [&](double y) {
            double prod = 1.0;
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                prod *= (y - ynodes[i]) / (ynodes[j] - ynodes[i]);
            }
            const double t = (lambda == 1.0) ? y : std::pow(y, inv);
            const double jac = (lambda == 1.0) ? 1.0 : inv * std::pow(y, inv - 1.0);
            return prod * w(t) * jac;
        };
        weights[j] = integrate_power_endpoints(integrand, ya, yb, left_exp, right_exp, opt);
    }

    const double mass = w.mass(opt);
    double wsum = 0.0;
    for (double wj : weights) wsum += wj;
    if (std::abs(wsum - mass) > 1e-12 * std::max(1.0, std::abs(mass)))
        throw Error("QuadratureRule: weight sum deviates from the weight mass k_w");

    const int exactness = n - 1;
    return QuadratureRule(std::move(nodes), std::move(weights), lambda, std::move(w),
                          exactness, mass);
}

QuadratureRule QuadratureRule::gauss_muntz(const WeightFunction& w, double lambda, int N) {
    if (N < 0) throw DomainError("QuadratureRule::gauss_muntz: N must be >= 0");
    const auto seq = OrthogonalSequence::build(w, lambda, N + 1);
    auto rule = interpolatory(seq.roots(N + 1), lambda, w);
    for (double wj : rule.weights_)
        if (!(wj > 0.0))
            throw Error("QuadratureRule::gauss_muntz: non-positive weight");
    rule.exactness_degree_ = 2 * N + 1;
    return rule;
}

double QuadratureRule::integrate(const std::function<double(double)>& p) const {
    double sum = 0.0;
    for (size_t j = 0; j < nodes_.size(); ++j) sum += p(nodes_[j]) * weights_[j];
    return sum;
}

double error_bound_analytic(double k_w, double M_r, double r, int N) {
    if (!(r > 1.0)) throw DomainError("error_bound_analytic: requires r > 1");
    if (!(M_r > 0.0) || !(k_w > 0.0))
        throw DomainError("error_bound_analytic: requires k_w > 0 and M_r > 0");
    if (N < 0) throw DomainError("error_bound_analytic: requires N >= 0");
    return 4.0 * k_w * M_r / (std::pow(r, 2 * N + 2) * (1.0 - 1.0 / r));
}

double error_bound_bounded_variation(double k_w, double V_s, int s, int N) {
    if (s < 1) throw DomainError("error_bound_bounded_variation: requires s >= 1");
    if (N < s / 2)
        throw DomainError("error_bound_bounded_variation: requires N >= floor(s/2)");
    if (!(k_w > 0.0) || !(V_s > 0.0))
        throw DomainError("error_bound_bounded_variation: requires k_w > 0 and V_s > 0");
    double denom_product = 1.0; // (2N+1)(2N)...(2N-s+2), exactly s factors
    for (int i = 0; i < s; ++i) denom_product *= 2 * N + 1 - i;
    return 4.0 * k_w * V_s / (M_PI * s * denom_product);
}

std::vector<NodeDistanceRow> node_distance_study(std::span<const double> lambdas,
                                                 int weight_exponent, int degree, double c) {
    if (!(c > 0.0)) throw DomainError("node_distance_study: requires c > 0");
    if (weight_exponent < 1)
        throw DomainError("node_distance_study: weight exponent must be >= 1");
    if (degree < 1) throw DomainError("node_distance_study: degree must be >= 1");
    std::vector<NodeDistanceRow> rows;
    rows.reserve(lambdas.size());
    for (double lam : lambdas) {
        WeightFunction w([c, weight_exponent](double t) { return std::pow(c - t, weight_exponent); },
                         0.0, c, 0.0, static_cast<double>(weight_exponent));
        const auto seq = OrthogonalSequence::build(std::move(w), lam, degree);
        auto nodes = seq.roots(degree);
        double norm2 = 0.0;
        for (double t : nodes) norm2 += (t - c) * (t - c);
        rows.push_back({lam, std::move(nodes), std::sqrt(norm2)});
    }
    return rows;
}

} // namespace fracquad
