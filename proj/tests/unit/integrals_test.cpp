#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "siegel/exact/parse.hpp"
#include "siegel/integrals/integrals.hpp"
#include "siegel/integrals/quadrature.hpp"

using namespace siegel;
using namespace siegel::integrals;

namespace {
Affine aff(const char* t) { return Affine::from_poly(P(t)); }
double val(const GammaProduct& g, std::map<std::string, double> m) { return g.eval(std::move(m)).real(); }
}  // namespace

TEST(Integrals, BaseAndTraceMoments) {
    GammaProduct b = base_integral(aff("s - 3/2"));
    EXPECT_NEAR(val(b, {{"s", 2.0}, {"tau", 1.0}}), M_PI / 2, 1e-12);
    GammaProduct t = trace_moment(aff("s - 1"));
    GammaProduct want = GammaProduct::gamma(aff("s")) * GammaProduct::gamma(aff("s + 1/2"));
    want.pre = RatFunc(P("2*sqrtpi*(s + 1/2)"));
    EXPECT_EQ(t, want);
    GammaProduct e = entry_moment(aff("s"));
    GammaProduct we = GammaProduct::gamma(aff("s")) * GammaProduct::gamma(aff("s - 1/2"));
    we.pre = RatFunc(P("sqrtpi*s"));
    EXPECT_EQ(e, we);
}

TEST(Integrals, CKappa) {
    GammaProduct c3 = c_kappa(Affine(3)).normalized();
    EXPECT_TRUE(c3.factor_free());
    EXPECT_EQ(c3.pre, RatFunc(P("pi/2")));
}

TEST(Integrals, SturmPhantom) {
    half::HalfExpr b = half::delta_plus2(P("aT") * half::HalfExpr::exp_seed(), aff("k"));
    InvariantIntegrand A = from_halfexpr(b);
    EXPECT_EQ(A.terms.size(), 3u);
    SturmResult r = sturm_value(A, aff("k + 2"));
    EXPECT_TRUE(r.converges_for_positive_s());
    auto prod = r.value.as_product();
    ASSERT_TRUE(prod);
    GammaProduct q = *prod * sturm_closed_form().inverse();
    q = q.normalized();
    EXPECT_TRUE(q.num.empty() && q.den.empty());
    EXPECT_EQ(q.pre, RatFunc(P("4*pi*sqrtpi*aT*tau")));
    EXPECT_EQ(q.fourPi, aff("-2*k - 2*s"));
    for (long k = 1; k <= 5; ++k) {
        GammaLimit l = gamma_limit(prod->subs("k", Affine(k)));
        ASSERT_EQ(l.kind, GammaLimit::Kind::Value);
        if (k == 1) {
            EXPECT_EQ(l.value.normalized().pre, RatFunc(P("-aT*tau/8")));
        } else {
            EXPECT_TRUE(l.is_zero()) << k;
        }
    }
}

TEST(Integrals, HolomorphicSeed) {
    InvariantIntegrand A{{{P("aT"), Affine(), Affine(), 0, 2}}};
    SturmResult r = sturm_value(A, aff("kappa"), 0, false);
    GammaProduct g = (*r.value.as_product() * c_kappa(aff("kappa")).inverse()).normalized();
    EXPECT_TRUE(g.num.empty() && g.den.empty());
    EXPECT_EQ(g.pre, RatFunc(P("aT")));
    EXPECT_EQ(g.fourPi, aff("-kappa"));
}

TEST(Integrals, Quadrature) {
    auto t0 = std::chrono::steady_clock::now();
    QuadratureConfig cfg;
    auto r = cone_integral(gamma_integrand(cfg.T, 0.5, 0), cfg);
    EXPECT_NEAR(r.estimate / (M_PI / 2), 1.0, 1e-6);
    std::array<double, 3> T2{1.0, 0.5, 1.0};
    auto r2 = cone_integral(gamma_integrand(T2, 1.1 - 1.5, 0), cfg);
    double want = val(base_integral(aff("s - 3/2")), {{"s", 1.1}, {"tau", 0.75}});
    EXPECT_NEAR(r2.estimate / want, 1.0, 1e-6);
    auto r3 = cone_integral(gamma_integrand(cfg.T, 1.25 - 1, 1), cfg);
    EXPECT_NEAR(r3.estimate / val(trace_moment(aff("s - 1")), {{"s", 1.25}}), 1.0, 1e-6);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("quadrature: %.1f ms\n", ms);
}

TEST(Integrals, LemmaSweep) {
    QuadratureConfig cfg;
    for (std::array<double, 3> T : {std::array<double, 3>{1, 0, 1}, std::array<double, 3>{1, 0.5, 1}}) {
        double detT = T[0] * T[2] - T[1] * T[1];
        for (double s : {1.1, 1.5, 2.0, 3.0}) {
            auto r = cone_integral(gamma_integrand(T, s - 1.5, 0), cfg);
            double want = val(base_integral(aff("s - 3/2")), {{"s", s}, {"tau", detT}});
            EXPECT_NEAR(r.estimate / want, 1.0, 1e-6) << s;
        }
    }
    for (double s : {1.1, 1.5, 2.0, 3.0}) {
        auto r = cone_integral(gamma_integrand(cfg.T, s - 1, 1), cfg);
        EXPECT_NEAR(r.estimate / val(trace_moment(aff("s - 1")), {{"s", s}}), 1.0, 1e-6) << s;
    }
}

TEST(Integrals, SturmQuotientAndOffsets) {
    half::HalfExpr b = half::delta_plus2(P("aT") * half::HalfExpr::exp_seed(), aff("k"));
    InvariantIntegrand A = from_halfexpr(b);
    auto limits = [&](long offset) {
        std::vector<GammaLimit> out;
        auto prod = sturm_value(A, aff("k + 2"), offset).value.as_product();
        for (long k = 1; k <= 5; ++k) out.push_back(gamma_limit(prod->subs("k", Affine(k))));
        return out;
    };
    auto base = limits(0);
    GammaProduct q = (base[0].value * c_kappa(Affine(3)).inverse()).normalized();
    std::printf("k=1 quotient: %s\n", q.str().c_str());
    EXPECT_EQ(q.pre * RatFunc(P("4*pi")).pow(static_cast<int>(q.fourPi.constant().get_num().get_si())), RatFunc(P("-aT*tau")) * RatFunc(P("4*pi")).pow(-1));
    for (long off : {-1L, 1L}) {
        auto l = limits(off);
        bool pattern = l[0].kind == GammaLimit::Kind::Value && !l[0].is_zero();
        for (int i = 1; i < 5; ++i) pattern = pattern && l[i].is_zero();
        EXPECT_FALSE(pattern) << off;
    }
}
