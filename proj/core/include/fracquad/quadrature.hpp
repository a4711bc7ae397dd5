#pragma once

#include <span>
#include <vector>

#include "fracquad/muntz.hpp"

namespace fracquad {

/// Cardinal basis of the fractional interpolation:
///   h_j(t) = prod_{i != j} (t^lambda - t_i^lambda) / (t_j^lambda - t_i^lambda),
/// evaluated in product form (never expanded; the monomial coefficients are
/// catastrophically ill-conditioned for clustered nodes). For lambda = 1
/// this is the classical Lagrange basis.
double fractional_lagrange(std::span<const double> nodes, double lambda, int j, double t);

/// An (N+1)-point rule  integral(p * w) ~= sum_j p(t_j) w_j  that is exact
/// for Muntz polynomials (exponent ladder j*lambda) up to exactness_degree:
/// N for arbitrary distinct nodes, 2N+1 when the nodes are the roots of the
/// orthogonal Muntz polynomial p_{N+1} for the weight.
class QuadratureRule {
public:
    /// Interpolatory weights w_j = integral(h_j * w) by adaptive
    /// singularity-aware quadrature (performed in y = t^lambda space where
    /// h_j is a classical polynomial). Nodes must be distinct within
    /// 1e-12*(b-a) and lie inside the weight's domain closure.
    static QuadratureRule interpolatory(std::vector<double> nodes, double lambda,
                                        WeightFunction w);

    /// Gauss-type rule: nodes are the N+1 roots of the orthogonal monic
    /// Muntz polynomial of degree N+1 for w; exact to degree 2N+1 with
    /// strictly positive weights.
    static QuadratureRule gauss_muntz(const WeightFunction& w, double lambda, int N);

    double integrate(const std::function<double(double)>& p) const;

    double lambda() const { return lambda_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    const WeightFunction& weight() const { return weight_; }
    int exactness_degree() const { return exactness_degree_; }
    /// Total weight mass k_w; equals the sum of the quadrature weights
    /// (enforced to 1e-12 relative at construction).
    double mass() const { return mass_; }

private:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights, double lambda,
                   WeightFunction w, int exactness_degree, double mass);

    std::vector<double> nodes_;
    std::vector<double> weights_;
    double lambda_;
    WeightFunction weight_;
    int exactness_degree_;
    double mass_;
};

/// Remainder bound for p analytic inside the Bernstein ellipse with
/// semi-axis sum r > 1 and |p| <= M_r there (rule on [a,b] within [-1,1]):
///   |R_N(p)| <= 4 k_w M_r / (r^{2N+2} (1 - 1/r)).
double error_bound_analytic(double k_w, double M_r, double r, int N);

/// Remainder bound for p with p^{(s)} of bounded variation V_s on [-1,1],
/// N >= floor(s/2):
///   |R_N(p)| <= 4 k_w V_s / (pi s (2N+1)(2N)...(2N-s+2)),
/// the denominator product carrying exactly s factors.
double error_bound_bounded_variation(double k_w, double V_s, int s, int N);

struct NodeDistanceRow {
    double lambda;
    std::vector<double> nodes;
    double distance_norm; // || t - c*1 ||_2
};

/// Roots of the degree-`degree` orthogonal Muntz polynomial for the weight
/// (c - t)^p on [0, c], and their l2 distance from c, for each lambda.
/// The norm grows as lambda decreases and as p increases.
std::vector<NodeDistanceRow> node_distance_study(std::span<const double> lambdas,
                                                 int weight_exponent, int degree, double c);

} // namespace fracquad
