#include <gtest/gtest.h>

#include <random>

#include "siegel/exact/parse.hpp"
#include "siegel/shift/shift.hpp"

using namespace siegel;
using namespace siegel::shift;

TEST(Shift, TableEntries) {
    ShiftOperator c1 = casimir_rule_c1();
    EXPECT_EQ(c1.size(), 4u);
    EXPECT_EQ(c1.coeff({2, 2}), expand_s(P("32*pi*tau*s1")));
    EXPECT_EQ(c1.coeff({0, 0}), P("u^2 + (v - u)^2 - 5"));
    EXPECT_EQ(casimir_rule_c2().size(), 9u);
    EXPECT_TRUE(casimir_rule_c2().coeff({0, 6}).is_zero());
    EXPECT_EQ(ShiftOperator::parse(c1.str()), c1);
}

TEST(Shift, CompositionUnitsAndCrossCheck) {
    ShiftOperator c1 = casimir_rule_c1(), id = ShiftOperator::identity();
    EXPECT_EQ(compose(id, c1), c1);
    EXPECT_EQ(compose(c1, id), c1);
    EXPECT_EQ(compose(c1, c1).coeff({0, 4}), expand_s(P("256*pi^2*(s1 + s2)*(s1 + s2 + 1)")));
    EXPECT_TRUE(commutator(c1, c1).is_zero());
}

TEST(Shift, Associativity) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> sh(0, 2), co(-3, 3);
    auto rnd = [&] {
        ShiftOperator f;
        for (int t = 0; t < 3; ++t)
            f.add({2 * sh(rng), 2 * sh(rng)}, Poly(co(rng)) * P("u") + Poly(co(rng)) * P("v^2") + Poly(co(rng)));
        return f;
    };
    for (int t = 0; t < 20; ++t) {
        ShiftOperator f = rnd(), g = rnd(), h = rnd();
        EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
        EXPECT_EQ(compose(f, g + h), compose(f, g) + compose(f, h));
        EXPECT_EQ(compose(f + g, h), compose(f, h) + compose(g, h));
    }
}

TEST(Shift, RepairedTableIdentities) {
    ShiftOperator c1 = casimir_rule_c1(), c2 = casimir_rule_c2(Table::Repaired);
    EXPECT_EQ(c2, c2_from_dplus_display());
    EXPECT_EQ(dplus_op(c1, c2, P("u")), dplus_display());
    EXPECT_EQ(dminus_op(c1, c2, P("v")), dminus_display());
    EXPECT_TRUE(commutator(c1, c2).is_zero());
    auto line = restrict_line(dplus_op(c1, c2, P("u")));
    ASSERT_EQ(line.size(), 1u);
    EXPECT_EQ(line[0].first, Shift(2, 4));
    EXPECT_EQ(line[0].second, P("64*pi^2*tau*(u - 1)*(u - 2)"));
}

TEST(Shift, LiteralTableFindings) {
    ShiftOperator c1 = casimir_rule_c1(), c2 = casimir_rule_c2(Table::Literal);
    EXPECT_FALSE((dplus_op(c1, c2, P("u")) - dplus_display()).is_zero());
    EXPECT_FALSE(commutator(c1, c2).is_zero());
    ShiftOperator diff = c2 - casimir_rule_c2(Table::Repaired);
    EXPECT_EQ(diff.size(), 3u);
}

TEST(Shift, DplusOneRelation) {
    ShiftOperator c1 = casimir_rule_c1(), c2 = casimir_rule_c2(Table::Repaired);
    ShiftOperator x = P("u^2 - 1") * (c1 - ShiftOperator::scalar(P("u^2 - 4")));
    ShiftOperator d1 = dplus_op(c1, c2, Poly(1)), du = dplus_op(c1, c2, P("u"));
    EXPECT_TRUE((d1 - x - du).is_zero());
    EXPECT_FALSE((d1 + x - du).is_zero());
    ShiftOperator dm = dminus_op(c1, c2, P("v")) - dminus_op(c1, c2, Poly(3));
    for (auto& [s, c] : dm.terms()) EXPECT_TRUE(c.divide_exact(P("v^2 - 9")).has_value());
}
