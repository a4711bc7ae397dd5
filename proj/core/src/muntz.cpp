#include "fracquad/muntz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "fracquad/special_functions.hpp"

namespace fracquad {
namespace {

inline double two_sum(double a, double b, double& err) {
    const double s = a + b;
    const double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    const double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

// Compensated Horner: result accurate as if computed in twice the working
// precision, which matters for the large alternating coefficients of
// higher-degree Muntz-Legendre polynomials.
double horner_compensated(const std::vector<double>& c, double y) {
    const int n = static_cast<int>(c.size());
    double s = c[n - 1];
    double comp = 0.0;
    for (int i = n - 2; i >= 0; --i) {
        double pe, se;
        const double p = two_prod(s, y, pe);
        s = two_sum(p, c[i], se);
        comp = comp * y + (pe + se);
    }
    return s + comp;
}

} // namespace

MuntzPolynomial::MuntzPolynomial(double lambda, std::vector<double> coeffs)
    : lambda_(lambda), coeffs_(std::move(coeffs)) {
    if (!(lambda_ > 0.0) || lambda_ > 1.0)
        throw DomainError("MuntzPolynomial: lambda must lie in (0, 1]");
    if (coeffs_.empty()) throw DomainError("MuntzPolynomial: empty coefficient list");
    if (coeffs_.back() == 0.0 && coeffs_.size() > 1)
        throw DomainError("MuntzPolynomial: leading coefficient must be nonzero");
}

MuntzPolynomial MuntzPolynomial::legendre(int m, double lambda) {
    if (m < 0) throw DomainError("MuntzPolynomial::legendre: m must be >= 0");
    if (!(lambda > 0.0) || lambda > 1.0)
        throw DomainError("MuntzPolynomial::legendre: lambda must lie in (0, 1]");
    // With the ladder lambda_i = i*lambda the product formula for c_{i,m}
    // collapses to
    //   c_{i,m} = (-1)^{m-i} prod_{j=0}^{m-1} (1 + (i+j) lambda)
    //             / (lambda^m i! (m-i)!).
    std::vector<double> coeffs(m + 1);
    if (m == 0) {
        coeffs[0] = 1.0;
        return MuntzPolynomial(lambda, std::move(coeffs));
    }
    const bool log_space = m >= 12; // the raw products overflow/cancel beyond this
    for (int i = 0; i <= m; ++i) {
        const double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
        if (log_space) {
            double log_num = 0.0;
            for (int j = 0; j < m; ++j) log_num += std::log1p((i + j) * lambda);
            const double log_den =
                m * std::log(lambda) + log_gamma(i + 1.0) + log_gamma(m - i + 1.0);
            coeffs[i] = sign * std::exp(log_num - log_den);
        } else {
            double num = 1.0;
            for (int j = 0; j < m; ++j) num *= 1.0 + (i + j) * lambda;
            double den = 1.0;
            for (int j = 2; j <= i; ++j) den *= j;
            for (int j = 2; j <= m - i; ++j) den *= j;
            den *= std::pow(lambda, m);
            coeffs[i] = sign * num / den;
        }
    }
    return MuntzPolynomial(lambda, std::move(coeffs));
}

double MuntzPolynomial::evaluate_in_y(double y) const {
    return horner_compensated(coeffs_, y);
}

double MuntzPolynomial::operator()(double t) const {
    if (t < 0.0) throw DomainError("MuntzPolynomial: t must be >= 0");
    if (t == 0.0) return coeffs_[0];
    return evaluate_in_y(lambda_ == 1.0 ? t : std::pow(t, lambda_));
}

WeightFunction::WeightFunction(std::function<double(double)> w, double a, double b,
                               double left_singularity_exponent,
                               double right_singularity_exponent)
    : w_(std::move(w)),
      a_(a),
      b_(b),
      left_exponent_(left_singularity_exponent),
      right_exponent_(right_singularity_exponent) {
    if (!(a_ < b_)) throw DomainError("WeightFunction: requires a < b");
    if (left_exponent_ < 0.0 || right_exponent_ < 0.0)
        throw DomainError("WeightFunction: singularity exponents must be >= 0");
}

double WeightFunction::mass(const IntegrationOptions& opt) const {
    return integrate_power_endpoints(w_, a_, b_, left_exponent_, right_exponent_, opt);
}

double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g, const WeightFunction& w,
                     const IntegrationOptions& opt) {
    auto integrand = [&](double t) { return f(t) * g(t) * w(t); };
    return integrate_power_endpoints(integrand, w.a(), w.b(), w.left_exponent(),
                                     w.right_exponent(), opt);
}

namespace {

// The recurrence works in y = t^lambda, where every integrand is a classical
// polynomial against the transformed weight
//   W(y) = w(y^{1/lambda}) (1/lambda) y^{1/lambda - 1}
// on [a^lambda, b^lambda]. For a = 0 the Jacobian folds into the left
// endpoint exponent: (p + 1)/lambda - 1.
struct YSpaceWeight {
    std::function<double(double)> W;
    double ya, yb;
    double left_exp, right_exp;
};

YSpaceWeight make_y_weight(const WeightFunction& w, double lambda) {
    if (lambda == 1.0)
        return {[&w](double y) { return w(y); }, w.a(), w.b(), w.left_exponent(),
                w.right_exponent()};
    if (w.a() < 0.0)
        throw DomainError("OrthogonalSequence: weight domain must satisfy a >= 0 for lambda < 1");
    const double inv = 1.0 / lambda;
    auto W = [&w, lambda, inv](double y) {
        const double t = std::pow(y, inv);
        return w(t) * inv * std::pow(y, inv - 1.0);
    };
    const double ya = std::pow(w.a(), lambda);
    const double yb = std::pow(w.b(), lambda);
    const double left =
        (w.a() == 0.0) ? (w.left_exponent() + 1.0) * inv - 1.0 : w.left_exponent();
    return {std::move(W), ya, yb, left, w.right_exponent()};
}

double monic_eval(const std::vector<double>& alphas, const std::vector<double>& betas, int n,
                  double y) {
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = y - alphas[0];
    for (int k = 1; k < n; ++k) {
        const double next = (y - alphas[k]) * p - betas[k - 1] * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

} // namespace

OrthogonalSequence::OrthogonalSequence(WeightFunction w, double lambda, int max_degree)
    : weight_(std::move(w)), lambda_(lambda), max_degree_(max_degree) {}

OrthogonalSequence OrthogonalSequence::build(WeightFunction w, double lambda, int max_degree) {
    if (!(lambda > 0.0) || lambda > 1.0)
        throw DomainError("OrthogonalSequence: lambda must lie in (0, 1]");
    if (max_degree < 1) throw DomainError("OrthogonalSequence: max_degree must be >= 1");

    OrthogonalSequence seq(std::move(w), lambda, max_degree);
    const YSpaceWeight yw = make_y_weight(seq.weight_, lambda);
    const IntegrationOptions opt{1e-15, 1e-14, 60};
    auto iq = [&](const std::function<double(double)>& f) {
        return integrate_power_endpoints(f, yw.ya, yw.yb, yw.left_exp, yw.right_exp, opt);
    };

    auto& alphas = seq.alphas_;
    auto& betas = seq.betas_;
    auto& norms2 = seq.norms2_;
    norms2.push_back(iq(yw.W));
    if (!(norms2[0] > 0.0))
        throw Error("OrthogonalSequence: weight has non-positive mass");
    alphas.push_back(iq([&](double y) { return y * yw.W(y); }) / norms2[0]);

    for (int n = 1; n < max_degree; ++n) {
        auto pn = [&](double y) { return monic_eval(alphas, betas, n, y); };
        const double nrm = iq([&](double y) {
            const double v = pn(y);
            return v * v * yw.W(y);
        });
        if (!(nrm > 0.0))
            throw Error("OrthogonalSequence: beta_" + std::to_string(n) +
                        " <= 0; weight or integration accuracy inadequate");
        betas.push_back(nrm / norms2[n - 1]);
        norms2.push_back(nrm);
        alphas.push_back(iq([&](double y) {
                             const double v = pn(y);
                             return y * v * v * yw.W(y);
                         }) /
                         nrm);
    }

    // Post-hoc check: each p_n must be orthogonal to all lower-degree Muntz
    // monomials, relative to the norms involved. Monomials keep the check
    // well-scaled where a p_i-vs-p_j test would drown in integration noise.
    const double pN_norm2 = iq([&](double y) {
        const double v = monic_eval(alphas, betas, max_degree, y);
        return v * v * yw.W(y);
    });
    std::vector<double> mono_norm(max_degree); // ||y^j||_W
    for (int j = 0; j < max_degree; ++j)
        mono_norm[j] = std::sqrt(iq([&](double y) { return std::pow(y, 2 * j) * yw.W(y); }));
    for (int n = 1; n <= max_degree; ++n) {
        const double pn_norm = std::sqrt(n < max_degree ? norms2[n] : pN_norm2);
        for (int j = 0; j < n; ++j) {
            const double cross = iq([&](double y) {
                return std::pow(y, j) * monic_eval(alphas, betas, n, y) * yw.W(y);
            });
            if (std::abs(cross) > 1e-10 * pn_norm * mono_norm[j])
                throw Error("OrthogonalSequence: orthogonality check failed for (p_" +
                            std::to_string(n) + ", y^" + std::to_string(j) + ")");
        }
    }
    return seq;
}

double OrthogonalSequence::evaluate_monic_y(int n, double y) const {
    if (n < 0 || n > max_degree_)
        throw DomainError("OrthogonalSequence: degree out of range");
    return monic_eval(alphas_, betas_, n, y);
}

double OrthogonalSequence::evaluate_monic(int n, double t) const {
    const double y = (lambda_ == 1.0) ? t : std::pow(t, lambda_);
    return evaluate_monic_y(n, y);
}

std::vector<double> OrthogonalSequence::roots(int n) const {
    if (n < 1 || n > max_degree_)
        throw DomainError("OrthogonalSequence::roots: need 1 <= n <= max_degree");
    Eigen::VectorXd diag(n), subdiag(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag[i] = alphas_[i];
    for (int i = 0; i + 1 < n; ++i) subdiag[i] = std::sqrt(betas_[i]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("OrthogonalSequence::roots: eigenvalue iteration failed");

    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double y = solver.eigenvalues()[i];
        if (lambda_ == 1.0) {
            out[i] = y;
        } else {
            if (y < 0.0)
                throw DomainError("OrthogonalSequence::roots: negative node in y-space "
                                  "(weight domain must satisfy a >= 0)");
            out[i] = std::pow(y, 1.0 / lambda_);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fracquad
