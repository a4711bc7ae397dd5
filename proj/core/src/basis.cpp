#include "fracquad/basis.hpp"

#include <cmath>

#include "fracquad/quadrature.hpp"
#include "fracquad/special_functions.hpp"

namespace fracquad {

void BasisParams::validate() const {
    if (J < 1) throw DomainError("BasisParams: J must be >= 1");
    if (J > 20) throw DomainError("BasisParams: J unreasonably large");
    if (M < 1) throw DomainError("BasisParams: M must be >= 1");
    if (!(lambda > 0.0) || lambda > 1.0)
        throw DomainError("BasisParams: lambda must lie in (0, 1]");
}

int BasisParams::cell_of(double t) const {
    if (t < 0.0 || t > 1.0) throw DomainError("BasisParams::cell_of: t must lie in [0, 1]");
    const int n = static_cast<int>(t * cells()) + 1;
    return std::min(n, cells());
}

ScalingBasis::ScalingBasis(BasisParams params) : params_(params) {
    params_.validate();
    legendre_.reserve(params_.M);
    norm_factors_.reserve(params_.M);
    for (int m = 0; m < params_.M; ++m) {
        legendre_.push_back(MuntzPolynomial::legendre(m, params_.lambda));
        norm_factors_.push_back(std::sqrt(2.0 * m * params_.lambda + 1.0));
    }
    dilation_factor_ = std::pow(2.0, 0.5 * (params_.J - 1));

    // Cell-local projection rule: M+4 Chebyshev first-kind nodes on
    // [0, cell_width], weights for the unit weight. Identical per cell.
    const double h = params_.cell_width();
    WeightFunction unit([](double) { return 1.0; }, 0.0, h);
    auto rule = QuadratureRule::interpolatory(
        chebyshev_roots(ChebyshevKind::first, params_.M + 4, 0.0, h), params_.lambda,
        std::move(unit));
    proj_nodes_ = rule.nodes();
    proj_weights_ = rule.weights();
}

const MuntzPolynomial& ScalingBasis::legendre(int m) const {
    if (m < 0 || m >= params_.M) throw DomainError("ScalingBasis: degree index out of range");
    return legendre_[m];
}

double ScalingBasis::piecewise_power(int n, int m, double t) const {
    if (n < 1 || n > params_.cells() || m < 0 || m >= params_.M)
        throw DomainError("ScalingBasis::piecewise_power: index out of range");
    if (params_.cell_of(t) != n) return 0.0;
    if (m == 0) return 1.0;
    return std::pow(t - params_.cell_start(n), m * params_.lambda);
}

double ScalingBasis::scaling(int n, int m, double t) const {
    if (n < 1 || n > params_.cells() || m < 0 || m >= params_.M)
        throw DomainError("ScalingBasis::scaling: index out of range");
    if (params_.cell_of(t) != n) return 0.0;
    const double local = t * params_.cells() - (n - 1);
    return dilation_factor_ * norm_factors_[m] * legendre_[m](std::max(local, 0.0));
}

Eigen::VectorXd ScalingBasis::basis_vector(double t) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension());
    const int n = params_.cell_of(t);
    const double local = std::max(t * params_.cells() - (n - 1), 0.0);
    for (int m = 0; m < params_.M; ++m)
        v[params_.flat_index(n, m)] = dilation_factor_ * norm_factors_[m] * legendre_[m](local);
    return v;
}

Eigen::VectorXd ScalingBasis::power_vector(double t) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension());
    const int n = params_.cell_of(t);
    const double x = std::max(t - params_.cell_start(n), 0.0);
    for (int m = 0; m < params_.M; ++m)
        v[params_.flat_index(n, m)] = (m == 0) ? 1.0 : std::pow(x, m * params_.lambda);
    return v;
}

Eigen::VectorXd ScalingBasis::project(const std::function<double(double)>& p) const {
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dimension());
    for (int n = 1; n <= params_.cells(); ++n) {
        const double s = params_.cell_start(n);
        for (int m = 0; m < params_.M; ++m) {
            double sum = 0.0;
            for (size_t j = 0; j < proj_nodes_.size(); ++j) {
                const double t = s + proj_nodes_[j];
                sum += p(t) * scaling(n, m, t) * proj_weights_[j];
            }
            coeffs[params_.flat_index(n, m)] = sum;
        }
    }
    return coeffs;
}

double ScalingBasis::eval_expansion(const Eigen::VectorXd& coeffs, double t) const {
    if (coeffs.size() != dimension())
        throw DomainError("ScalingBasis::eval_expansion: coefficient size mismatch");
    const int n = params_.cell_of(t);
    const double local = std::max(t * params_.cells() - (n - 1), 0.0);
    double sum = 0.0;
    for (int m = 0; m < params_.M; ++m)
        sum += coeffs[params_.flat_index(n, m)] * dilation_factor_ * norm_factors_[m] *
               legendre_[m](local);
    return sum;
}

} // namespace fracquad
