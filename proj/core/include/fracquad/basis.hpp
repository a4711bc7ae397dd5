#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "fracquad/muntz.hpp"

namespace fracquad {

/// Parameters of the Muntz-Legendre scaling family: dilation level J,
/// M polynomials per dyadic cell, and the exponent-ladder step lambda.
/// The basis has dimension K = 2^{J-1} M; cell n (1-based) covers the
/// half-open interval [(n-1)/2^{J-1}, n/2^{J-1}).
struct BasisParams {
    int J = 1;
    int M = 1;
    double lambda = 1.0;

    void validate() const;
    int cells() const { return 1 << (J - 1); }
    int dimension() const { return cells() * M; }
    double cell_width() const { return 1.0 / cells(); }
    /// 1-based cell containing t; t = 1 maps to the last cell (left limit
    /// convention).
    int cell_of(double t) const;
    double cell_start(int n) const { return (n - 1) * cell_width(); }
    /// 0-based flat index of (cell n, degree m) in the basis vector.
    int flat_index(int n, int m) const { return (n - 1) * M + m; }
};

/// The piecewise fractional power functions T_{n,m} and the orthonormal
/// Muntz-Legendre scaling functions phi_{n,m} on [0,1), plus L2 projection
/// and expansion evaluation in the flattened basis vector ordering.
class ScalingBasis {
public:
    explicit ScalingBasis(BasisParams params);

    const BasisParams& params() const { return params_; }
    int dimension() const { return params_.dimension(); }
    const MuntzPolynomial& legendre(int m) const;

    /// T_{n,m}(t) = (t - cell_start)^{m*lambda} on cell n, else 0.
    double piecewise_power(int n, int m, double t) const;
    /// phi_{n,m}(t) = 2^{(J-1)/2} sqrt(2 m lambda + 1) L_m(2^{J-1} t - n + 1)
    /// on cell n, else 0.
    double scaling(int n, int m, double t) const;

    /// Phi(t): all K scaling functions at t (only one cell's M entries are
    /// nonzero).
    Eigen::VectorXd basis_vector(double t) const;
    /// T(t): all K piecewise power functions at t.
    Eigen::VectorXd power_vector(double t) const;

    /// L2 projection coefficients p_{n,m} = integral(p * phi_{n,m}). Each
    /// cell integral uses the fractional quadrature rule on M+4 Chebyshev
    /// (first kind) nodes, headroom above the basis exactness M-1.
    Eigen::VectorXd project(const std::function<double(double)>& p) const;

    /// Evaluate sum_i coeffs[i] phi_i(t).
    double eval_expansion(const Eigen::VectorXd& coeffs, double t) const;

private:
    BasisParams params_;
    std::vector<MuntzPolynomial> legendre_;
    std::vector<double> norm_factors_; // sqrt(2 m lambda + 1)
    double dilation_factor_;           // 2^{(J-1)/2}
    // Cell-local projection rule on [0, cell_width]; identical across cells.
    std::vector<double> proj_nodes_;
    std::vector<double> proj_weights_;
};

} // namespace fracquad
