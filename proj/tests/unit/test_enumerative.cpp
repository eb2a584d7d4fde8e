#include <gtest/gtest.h>

#include <cmath>

#include "coble/enumerative.hpp"

using namespace coble;

TEST(Intersection, DerivedTable) {
    const auto t = derive_intersection_table();
    EXPECT_EQ(t.value[0], -810);
    EXPECT_EQ(t.value[1], -162);
    EXPECT_EQ(t.value[2], -18);
    for (int r = 3; r < 8; ++r) EXPECT_EQ(t.value[r], 0);
    EXPECT_EQ(t.value[8], 1);
    EXPECT_EQ(t.value, reference_intersection_table().value);
}

TEST(Intersection, DualDegree) {
    const auto cls = dual_degree_class();
    EXPECT_EQ(cls.c[8], 384);
    EXPECT_EQ(cls.c[0], 2);
    EXPECT_EQ(cls.c[1], -31);  // -3 - 28
    EXPECT_EQ(cls.c[2], 210);
    EXPECT_EQ(dual_degree_computation(), 6);
}

TEST(Intersection, ChangingTheRelationChangesTheAnswer) {
    BlowupData d;
    d.relation_b = -35;
    EXPECT_NE(evaluate(dual_degree_class(), derive_intersection_table(d)), 6);
}

TEST(Verlinde, Dimensions) {
    EXPECT_EQ(verlinde_dimension(0).nearest, 1);
    EXPECT_EQ(verlinde_dimension(1).nearest, 9);
    for (int k = 0; k <= 12; ++k) {
        const auto v = verlinde_dimension(k);
        EXPECT_LE(std::abs(v.value - static_cast<double>(v.nearest)), 1e-6 * std::max(1.0, std::abs(v.value)));
    }
    EXPECT_THROW(verlinde_dimension(13), std::invalid_argument);
    EXPECT_GT(verlinde_v111(5), 0.0);
}

TEST(Verlinde, ThetaDegree) {
    EXPECT_EQ(verlinde_finite_difference(8), 2);
    EXPECT_EQ(verlinde_finite_difference(9), 0);
    EXPECT_EQ(theta_degree_from_verlinde(), 2);
}

TEST(Zagier, LeadingCoefficient) {
    EXPECT_EQ(zagier_leading_coefficient(1), ratio(1, 945));
    EXPECT_EQ(ratio(16, 3 * 5040), ratio(1, 945));
    EXPECT_EQ(Rational(40320 * 3) / 64 * zagier_leading_coefficient(1), 2);
    EXPECT_GT(sgn(zagier_leading_coefficient(2)), 0);
}

TEST(Counts, QuadricsAndRamification) {
    EXPECT_EQ(binomial(10, 2), 45);
    EXPECT_EQ(quadric_dimension_count(), 9);
    EXPECT_EQ(ramification_degree(), std::make_pair(3, 6));
}
