#include "siegel/integrals/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace siegel::integrals {

QuadratureResult cone_integral(const ConeIntegrand& f, const QuadratureConfig& cfg) {
    using boost::math::quadrature::tanh_sinh;
    tanh_sinh<double> q(cfg.maxRefinements);
    const double inner = cfg.tol * 1e-3;
    double worst = 0;
    // y11 = a, y22 = b, y12 = sqrt(ab) r, dY = sqrt(ab) da db dr; a = -log(1 - x)
    auto over_r = [&](double a, double b) {
        double w = std::sqrt(a * b), err = 0;
        double v = q.integrate([&](double r) { return f(a, w * r, b) * w; }, -1.0, 1.0, inner, &err);
        worst = std::max(worst, std::abs(err));
        return v;
    };
    auto over_b = [&](double a) {
        double err = 0;
        double v = q.integrate(
            [&](double x) {
                double b = -std::log1p(-x);
                return over_r(a, b) / (1 - x);
            },
            0.0, 1.0, inner, &err);
        worst = std::max(worst, std::abs(err));
        return v;
    };
    QuadratureResult r;
    double err = 0, l1 = 0;
    r.estimate = q.integrate(
        [&](double x) {
            double a = -std::log1p(-x);
            return over_b(a) / (1 - x);
        },
        0.0, 1.0, cfg.tol * 1e-2, &err, &l1);
    r.bound = std::abs(err) + worst;
    r.converged = r.bound <= cfg.tol * std::abs(r.estimate);
    return r;
}

ConeIntegrand gamma_integrand(const std::array<double, 3>& T, double p, int q) {
    return [T, p, q](double y11, double y12, double y22) {
        double tr = T[0] * y11 + 2 * T[1] * y12 + T[2] * y22;
        double det = y11 * y22 - y12 * y12;
        if (det <= 0) return 0.0;
        double v = std::exp(-tr) * std::pow(det, p);
        if (q) v *= std::pow(y11 + y22, q);
        return v;
    };
}

}  // namespace siegel::integrals
