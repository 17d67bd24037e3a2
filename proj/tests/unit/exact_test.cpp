#include <gtest/gtest.h>

#include "siegel/exact/gamma.hpp"
#include "siegel/exact/parse.hpp"

using namespace siegel;

TEST(Poly, ArithmeticAndPrinting) {
    Poly a = P("u - v + 1"), b = P("u + v");
    EXPECT_EQ((a * b).str(), "u^2 - v^2 + u + v");
    EXPECT_EQ(P("(u+1)^2 - u^2 - 2*u"), Poly(1));
    EXPECT_EQ(P("sqrtpi^2"), P("pi"));
    EXPECT_EQ(P("i*i"), Poly(-1));
}

TEST(Poly, RoundTrip) {
    for (const char* t : {"-u^2 + 2*u*v - 1", "3/2*u", "(1/2+i)*u*v^3 - 7", "-i*pi*tau"}) {
        Poly p = P(t);
        EXPECT_EQ(P(p.str()), p) << t;
        EXPECT_EQ(P(p.str()).str(), p.str()) << t;
    }
}

TEST(Poly, SubsAndDivision) {
    Poly s1 = P("(v - 2*u - 1)/2"), s2 = P("(u - 1)/2");
    EXPECT_EQ(s1 + s2, P("(v - u - 2)/2"));
    Poly f = P("(u^2 - 1)*(v + 3)");
    auto q = f.divide_exact(P("u - 1"));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, P("(u + 1)*(v + 3)"));
    EXPECT_FALSE(f.divide_exact(P("u - 2")));
    EXPECT_EQ(P("u^2 + v").subs("u", P("v + 1")), P("v^2 + 3*v + 1"));
    EXPECT_EQ(P("u*v").subs({{"u", P("v")}, {"v", P("u")}}), P("u*v"));
}

TEST(RatFunc, Normalize) {
    RatFunc r = parse_ratfunc("(u^2 - 1)/(2*u - 2)");
    EXPECT_TRUE(r.is_poly());
    EXPECT_EQ(r.as_poly(), P("(u + 1)/2"));
    RatFunc a = parse_ratfunc("1/u + 1/v");
    EXPECT_EQ(a, parse_ratfunc("(u + v)/(u*v)"));
    EXPECT_EQ(parse_ratfunc(a.str()), a);
}

TEST(Gamma, Normalization) {
    GammaProduct g = GammaProduct::gamma(Affine::from_poly(P("s + 5/2")));
    GammaProduct n = g.normalized();
    ASSERT_EQ(n.num.size(), 1u);
    EXPECT_EQ(n.num[0], Affine::from_poly(P("s + 1/2")));
    EXPECT_EQ(n.pre, RatFunc(P("(s + 1/2)*(s + 3/2)")));
    GammaProduct c = GammaProduct::gamma(Affine(mpq_class(5, 2))).normalized();
    EXPECT_TRUE(c.factor_free());
    EXPECT_EQ(c.pre, RatFunc(P("3/4*sqrtpi")));
    GammaProduct h;
    h.fourPi = Affine(mpq_class(1, 2));
    EXPECT_EQ(h.normalized().pre, RatFunc(P("2*sqrtpi")));
}

TEST(Gamma, LimitAtZero) {
    GammaProduct g = GammaProduct::gamma(Affine::from_poly(P("s + 1/2"))) *
                     GammaProduct::gamma(Affine::from_poly(P("s")));
    g.pre = RatFunc(P("s*(s - 1/2)"));
    GammaLimit l = gamma_limit(g);
    ASSERT_EQ(l.kind, GammaLimit::Kind::Value);
    EXPECT_TRUE(l.value.factor_free());
    EXPECT_EQ(l.value.pre, RatFunc(P("-1/2*sqrtpi")));

    GammaProduct p = GammaProduct::gamma(Affine::from_poly(P("2*s")));
    GammaLimit lp = gamma_limit(p);
    EXPECT_EQ(lp.kind, GammaLimit::Kind::Pole);
    EXPECT_EQ(lp.poleOrder, 1);
}

TEST(Gamma, CasesInParameter) {
    GammaProduct g = GammaProduct::gamma(Affine::from_poly(P("s + k - 1")));
    g.pre = RatFunc(P("s"));
    auto cases = gamma_limit_cases(g, "k", 1);
    ASSERT_EQ(cases.size(), 2u);
    EXPECT_EQ(cases[0].region, "k = 1");
    EXPECT_EQ(cases[0].result.value.pre, RatFunc(1));
    EXPECT_EQ(cases[1].region, "k >= 2");
    EXPECT_TRUE(cases[1].result.is_zero());
}

TEST(Gamma, ParsePrintRoundTrip) {
    GammaProduct g = GammaProduct::gamma(Affine::from_poly(P("s + k"))) * GammaProduct::gamma(Affine::from_poly(P("s + k + 1/2")));
    g.pre = RatFunc(P("sqrtpi*s*(s - 1/2)*aT*tau"));
    g.fourPi = Affine::from_poly(P("-2*k - 2*s"));
    g = g.normalized();
    GammaProduct back = GammaProduct::parse(g.str());
    EXPECT_EQ(back.str(), g.str());
    EXPECT_EQ(back, g);
    double a = g.eval({{"s", 0.3}, {"k", 1.2}, {"aT", 1.0}, {"tau", 1.0}}).real();
    double b = std::sqrt(M_PI) * 0.3 * (0.3 - 0.5) * std::tgamma(1.5) * std::tgamma(2.0) * std::pow(4 * M_PI, -3.0);
    EXPECT_NEAR(a, b, 1e-12);
}
