#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace siegel::integrals {

struct QuadratureConfig {
    double tol = 1e-6;
    std::size_t maxRefinements = 12;
    std::uint64_t seed = 0;
    std::array<double, 3> T{1.0, 0.0, 1.0};  // t11, t12, t22
};

struct QuadratureResult {
    double estimate = 0;
    double bound = 0;
    bool converged = false;
};

// f(y11, y12, y22) integrated against dY = dy11 dy12 dy22 over the positive-definite cone
using ConeIntegrand = std::function<double(double, double, double)>;
QuadratureResult cone_integral(const ConeIntegrand& f, const QuadratureConfig& cfg);

// exp(-tr(TY)) det(Y)^p tr(Y)^q for the configured T
ConeIntegrand gamma_integrand(const std::array<double, 3>& T, double p, int q);

}  // namespace siegel::integrals
