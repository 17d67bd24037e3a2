#include <gtest/gtest.h>

#include <random>

#include "siegel/exact/parse.hpp"
#include "siegel/halfspace/halfexpr.hpp"

using namespace siegel;
using namespace siegel::half;

namespace {
Affine aff(const char* t) { return Affine::from_poly(P(t)); }
}  // namespace

TEST(Half, Canonicalization) {
    HalfExpr a = HalfExpr::term(detY(), aff("k - 1/2"));
    EXPECT_EQ(a, HalfExpr::det_power(aff("k + 1/2")));
    HalfExpr b = HalfExpr::det_power(Affine(1)) * HalfExpr::det_power(Affine(-1));
    EXPECT_EQ(b, HalfExpr(Poly(1)));
    HalfExpr c = HalfExpr::term(P("y11"), Affine(-1)) + HalfExpr(P("y22"));
    EXPECT_EQ(HalfExpr::parse(c.str()), c);
    EXPECT_EQ(HalfExpr::parse(c.str()).str(), c.str());
}

TEST(Half, GeneratorActions) {
    HalfExpr e = HalfExpr::exp_seed();
    EXPECT_EQ(dZ(e, 1), P("2*pi*i*t12") * e);
    EXPECT_TRUE(dZbar(e, 0).is_zero());
    HalfExpr d = HalfExpr::det_power(aff("alpha"));
    EXPECT_EQ(dZ(d, 1), HalfExpr::term(P("-i/2*alpha") * adjY(1), aff("alpha - 1")));
    EXPECT_EQ(det2(Op::dZ, e), P("(2*pi*i)^2*(t11*t22 - t12^2)") * e);
    EXPECT_TRUE(det2(Op::dZ, HalfExpr(Poly(5))).is_zero());
}

TEST(Half, FreitagLemmas) {
    HalfExpr d = HalfExpr::det_power(aff("alpha"));
    for (int c = 0; c < 3; ++c) EXPECT_EQ(dY(d, c), HalfExpr::term(P("alpha") * adjY(c), aff("alpha - 1")));
    EXPECT_EQ(det2(Op::dY, d), HalfExpr::term(P("alpha*(alpha + 1/2)"), aff("alpha - 1")));
    EXPECT_EQ(cap2(inverse_Y(), matrix_T()), HalfExpr::term(trYT(), Affine(-1)));
    Sym2 A{HalfExpr(P("y11")), HalfExpr(P("y12")), HalfExpr(P("y22"))};
    EXPECT_EQ(cap2(A, A), HalfExpr(Poly(2) * detY()));
    Sym2 E{HalfExpr(Poly(1)), HalfExpr(), HalfExpr(Poly(1))};
    EXPECT_EQ(cap2(E, E), HalfExpr(Poly(2)));
}

TEST(Half, ProductRule) {
    auto check = [](const HalfExpr& f, const HalfExpr& g) {
        HalfExpr lhs = det2(Op::dZ, f * g);
        HalfExpr rhs = det2(Op::dZ, f) * g + cap2(gradient(Op::dZ, f), gradient(Op::dZ, g)) + f * det2(Op::dZ, g);
        return (lhs - rhs).is_zero();
    };
    EXPECT_TRUE(check(HalfExpr::det_power(aff("k - 1/2")), HalfExpr::exp_seed()));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> co(-4, 4);
    const char* mons[] = {"1", "y11", "y12", "y22", "y11^2", "y11*y12", "y12*y22", "y22^2", "y11*y22"};
    for (int t = 0; t < 10; ++t) {
        Poly f(0), g(0);
        for (auto m : mons) {
            f += Poly(co(rng)) * P(m);
            g += Poly(co(rng)) * P(m);
        }
        EXPECT_TRUE(check(HalfExpr(f), HalfExpr(g)));
    }
}

TEST(Half, Commutation) {
    HalfExpr e = HalfExpr::term(P("y11*y12 + 3*y22"), aff("k - 1/2"), 1) + HalfExpr::h({1}, P("y12"));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            EXPECT_EQ(dZ(dZbar(e, a), b), dZbar(dZ(e, b), a));
            EXPECT_EQ(dZ(dZ(e, a), b), dZ(dZ(e, b), a));
            EXPECT_EQ(dZbar(dZbar(e, a), b), dZbar(dZbar(e, b), a));
        }
}

TEST(Half, MaassOperators) {
    HalfExpr seed = P("aT") * HalfExpr::exp_seed();
    EXPECT_EQ(delta_plus2(seed, aff("k")), fourier_coeff_display(aff("k")));
    HalfExpr half = delta_plus2(seed, aff("1/2"));
    EXPECT_FALSE(half.is_zero());
    EXPECT_EQ(half, P("16*pi^2*aT*(t11*t22 - t12^2)") * HalfExpr::exp_seed());

    HalfExpr hp = delta_plus2(HalfExpr::h(), Affine(1));
    EXPECT_EQ(hp, weight_one_display(P("i")));
    EXPECT_NE(hp, weight_one_display(P("2*i")));
    EXPECT_EQ(delta_minus2(hp), P("3/4") * HalfExpr::h());
    EXPECT_TRUE(delta_minus2(HalfExpr::h()).is_zero());
    EXPECT_TRUE(delta_minus2(HalfExpr::exp_seed()).is_zero());
    EXPECT_EQ(delta_minus2(HalfExpr::term(P("1/2"), Affine(-1)) * HalfExpr::h()), P("3/4") * HalfExpr::h());
}
