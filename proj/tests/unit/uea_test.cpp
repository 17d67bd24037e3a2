#include <gtest/gtest.h>

#include <random>

#include "siegel/exact/parse.hpp"
#include "siegel/uea/casimir.hpp"

using namespace siegel;
using namespace siegel::uea;

TEST(Lie, MatricesInSp4) {
    for (int x = 0; x < kDim; ++x) EXPECT_TRUE(is_symplectic_algebra(basis_matrix(x))) << letter_name(x);
}

TEST(Lie, Brackets) {
    EXPECT_EQ(lincomb_str(bracket(B12, B21)), "B11 - B22");
    EXPECT_TRUE(bracket(B11, B11).empty());
    for (auto& [z, c] : bracket(Em11, Ep11)) EXPECT_TRUE(is_compact(z));
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y) {
            const Mat4& a = basis_matrix(x);
            const Mat4& b = basis_matrix(y);
            EXPECT_TRUE(mat_equal(to_matrix(bracket(x, y)), a * b - b * a));
        }
}

TEST(Lie, Jacobi) {
    int triples = 0;
    for (int x = 0; x < kDim; ++x)
        for (int y = x + 1; y < kDim; ++y)
            for (int z = y + 1; z < kDim; ++z) {
                LinComb X{{x, Scalar(1)}}, Y{{y, Scalar(1)}}, Z{{z, Scalar(1)}};
                Mat4 s = to_matrix(bracket(X, bracket(Y, Z))) + to_matrix(bracket(Y, bracket(Z, X))) +
                         to_matrix(bracket(Z, bracket(X, Y)));
                EXPECT_TRUE(mat_equal(s, mat_zero()));
                ++triples;
            }
    EXPECT_EQ(triples, 120);
}

TEST(PBW, SingleRewrite) {
    Element e = normalize(Element::word({B21, B12}), Ordering::ScalarK);
    Element want = Element::word({B12, B21}) - Element::letter(B11) + Element::letter(B22);
    EXPECT_EQ(e, want);
    Element o = Element::word({Ep11, Em12, B22});
    EXPECT_EQ(normalize(o, Ordering::ScalarK), o);
}

TEST(PBW, ProjectionAndMatrixImage) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> let(0, kDim - 1), len(1, 3), co(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Element e;
        for (int t = 0; t < 3; ++t) {
            Word w;
            int n = len(rng);
            for (int j = 0; j < n; ++j) w.push_back(static_cast<std::uint8_t>(let(rng)));
            e.add(w, Poly(co(rng)));
        }
        for (auto o : {Ordering::ScalarK, Ordering::BorelHC}) {
            Element n = normalize(e, o);
            for (auto& [w, c] : n.terms()) EXPECT_TRUE(is_ordered(w, o));
            EXPECT_EQ(normalize(n, o), n);
            EXPECT_TRUE(mat_equal(n.matrix(), e.matrix()));
        }
    }
}

TEST(Casimir, RawExpansion) {
    auto c1 = build_casimir(Casimir::C1, BOrientation::Transposed);
    EXPECT_EQ(c1.rawTerms, 12u);
    EXPECT_EQ(c1.element.size(), 10u);
    EXPECT_EQ(formal_trace({Bkl, Bkl}).size(), 4u);
}

TEST(Casimir, OrientationSigmaAndHC) {
    EXPECT_TRUE(is_central(build_casimir(Casimir::C1, BOrientation::Literal).element));
    EXPECT_FALSE(is_central(build_casimir(Casimir::C2, BOrientation::Literal).element));
    auto o = fit_orientation();
    ASSERT_TRUE(o);
    EXPECT_EQ(*o, BOrientation::Transposed);
    auto s = fit_sigma(*o);
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, Scalar(-1));
    EXPECT_TRUE(verify_scalar_restriction(Casimir::C2, *o, *s).ok());
    auto h = fit_hc(*o);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->phase, 1);
    EXPECT_EQ(h->shift, 1);
    Element C1 = build_casimir(Casimir::C1, *o).element, C2 = build_casimir(Casimir::C2, *o).element;
    EXPECT_EQ(hc_image(C2, *h), hc_expected(Casimir::C2));
    EXPECT_EQ(hc_image(C1 * C1, *h), hc_expected(Casimir::C1).pow(2));
    EXPECT_EQ(hc_image(C1 * C2, *h), hc_expected(Casimir::C1) * hc_expected(Casimir::C2));
    EXPECT_EQ(hc_image(Element(Poly(1)), *h), Poly(1));
}
