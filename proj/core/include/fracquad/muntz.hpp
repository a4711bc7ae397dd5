#pragma once

#include <functional>
#include <vector>

#include "fracquad/integrate.hpp"

namespace fracquad {

/// A Muntz polynomial sum_i coeffs[i] * t^{i*lambda} on t >= 0.
/// "Degree" is the index of the highest retained coefficient, matching the
/// exponent ladder lambda_i = i*lambda.
class MuntzPolynomial {
public:
    MuntzPolynomial(double lambda, std::vector<double> coeffs);

    /// The Muntz-Legendre polynomial L_m: orthogonal on [0,1] under the unit
    /// weight with ||L_m||^2 = 1/(2 m lambda + 1) and L_m(1) = 1.
    static MuntzPolynomial legendre(int m, double lambda);

    double lambda() const { return lambda_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Evaluate at t >= 0 via compensated Horner in y = t^lambda. The
    /// monomial coefficients are ill-conditioned at higher degree; the
    /// compensated scheme keeps values accurate to a few ulp anyway.
    double operator()(double t) const;

    /// Evaluate the underlying classical polynomial at y (= t^lambda).
    double evaluate_in_y(double y) const;

private:
    double lambda_;
    std::vector<double> coeffs_;
};

/// A weight function w >= 0 on [a, b] with declared algebraic endpoint
/// behavior: w ~ (t-a)^p near a and w ~ (b-t)^q near b, p, q >= 0. The
/// exponents let integrators substitute away fractional endpoint powers.
/// a >= 0 is required whenever lambda < 1 machinery (the y = t^lambda
/// substitution) touches the weight; a < 0 is accepted for lambda = 1 use.
class WeightFunction {
public:
    WeightFunction(std::function<double(double)> w, double a, double b,
                   double left_singularity_exponent = 0.0,
                   double right_singularity_exponent = 0.0);

    double operator()(double t) const { return w_(t); }
    double a() const { return a_; }
    double b() const { return b_; }
    double left_exponent() const { return left_exponent_; }
    double right_exponent() const { return right_exponent_; }

    /// Total mass k_w = integral of w over [a, b].
    double mass(const IntegrationOptions& opt = {}) const;

private:
    std::function<double(double)> w_;
    double a_, b_;
    double left_exponent_, right_exponent_;
};

/// Weighted inner product (f, g)_w = integral of f*g*w over the weight's
/// domain, adaptive with endpoint substitutions driven by the declared
/// singularity exponents. Absolute tolerance defaults to 1e-14.
double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g, const WeightFunction& w,
                     const IntegrationOptions& opt = {});

/// Monic Muntz polynomials p_n orthogonal under a given weight, generated by
/// the three-term recurrence
///   p_{n+1} = (x^lambda - alpha_n) p_n - beta_n p_{n-1}.
/// All recurrence inner products are evaluated after y = t^lambda, where the
/// integrands are classical polynomials against a transformed weight; the
/// same Jacobi matrix then yields the roots.
class OrthogonalSequence {
public:
    /// Stieltjes construction up to degree max_degree. Fails if any beta
    /// comes out non-positive or the generated polynomials are not pairwise
    /// orthogonal to 1e-10 (relative to their norms) -- either signals that
    /// the weight or the integration accuracy is inadequate.
    static OrthogonalSequence build(WeightFunction w, double lambda, int max_degree);

    double lambda() const { return lambda_; }
    int max_degree() const { return max_degree_; }
    const WeightFunction& weight() const { return weight_; }
    /// alphas()[n] = alpha_n for n = 0..max_degree-1.
    const std::vector<double>& alphas() const { return alphas_; }
    /// betas()[n-1] = beta_n for n = 1..max_degree-1.
    const std::vector<double>& betas() const { return betas_; }
    /// ||p_n||_w^2 for n = 0..max_degree-1, a byproduct of construction.
    const std::vector<double>& norms_squared() const { return norms2_; }

    /// Monic p_n evaluated in y-space (y = t^lambda), n <= max_degree.
    double evaluate_monic_y(int n, double y) const;
    /// p_n(t) on the original domain.
    double evaluate_monic(int n, double t) const;

    /// The n roots of p_n, mapped back through t = y^{1/lambda}, ascending.
    /// Computed as eigenvalues of the symmetric tridiagonal Jacobi matrix.
    /// Throws DomainError if an eigenvalue is negative and lambda < 1
    /// (fractional root of a negative number; signals a < 0 misuse).
    std::vector<double> roots(int n) const;

private:
    OrthogonalSequence(WeightFunction w, double lambda, int max_degree);

    WeightFunction weight_;
    double lambda_;
    int max_degree_;
    std::vector<double> alphas_;
    std::vector<double> betas_;
    std::vector<double> norms2_;
};

} // namespace fracquad
