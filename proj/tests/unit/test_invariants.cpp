#include <gtest/gtest.h>

#include <set>

#include "coble/invariants.hpp"

using namespace coble;

TEST(InvariantDimension, TraceFormula) {
    EXPECT_EQ(invariant_dimension(0), 1);
    EXPECT_EQ(invariant_dimension(3), 5);
    EXPECT_EQ(invariant_dimension(6), 43);
    EXPECT_EQ(invariant_dimension(9), 310);
    EXPECT_THROW(invariant_dimension(4), DegreeNotDivisibleBy3);
}

TEST(InvariantDimension, AgreesWithOrbitCount) {
    for (int d : {3, 6, 9}) EXPECT_EQ(count_invariant_orbits(d), invariant_dimension(d)) << d;
}

TEST(ThetaMonomial, Parse) {
    EXPECT_EQ(parse_theta_monomial("00^2 01 11 12^2"),
              Monomial({{theta(0, 0), 2}, {theta(0, 1), 1}, {theta(1, 1), 1}, {theta(1, 2), 2}}));
    EXPECT_THROW(parse_theta_monomial("03"), std::invalid_argument);
}

TEST(InvariantBasis, Cubics) {
    const auto b = invariant_basis(3);
    ASSERT_EQ(b.elements.size(), 5u);
    for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(b.elements[k], printed_cubic(k));
        EXPECT_EQ(b.labels[k], "F" + std::to_string(k));
        EXPECT_EQ(b.elements[k].size(), k == 0 ? 9u : 3u);
    }
    EXPECT_EQ(b.elements[1], orbit_sum_full(Monomial{{theta(0, 0), 1}, {theta(0, 1), 1}, {theta(0, 2), 1}}));
}

TEST(InvariantBasis, Sextics) {
    const auto b = invariant_basis(6);
    ASSERT_EQ(b.elements.size(), 43u);
    const auto table = sextic_table_basis();
    EXPECT_EQ(std::set<Poly>(b.elements.begin(), b.elements.end()),
              std::set<Poly>(table.elements.begin(), table.elements.end()));
    EXPECT_EQ(b.elements[0], orbit_sum(Monomial{{theta(0, 0), 6}}));
    EXPECT_EQ(b.elements[17], orbit_sum(Monomial{{theta(0, 0), 2}, {theta(0, 1), 2}, {theta(0, 2), 2}}));
    EXPECT_EQ(b.elements[17].size(), 3u);
    EXPECT_EQ(polynomial_rank(b.elements), 43u);
    for (const auto& p : b.elements) EXPECT_TRUE(is_invariant_under_generators(p));
}

TEST(Iota, Action) {
    EXPECT_EQ(iota_act(printed_cubic(0)), printed_cubic(0));
    const auto b = invariant_basis(6);
    const Poly w1 = b.elements[7] - b.elements[6];
    EXPECT_EQ(b.elements[6], orbit_sum(parse_theta_monomial("00 01 02 10^3")));
    EXPECT_EQ(b.elements[7], orbit_sum(parse_theta_monomial("00 01 02 20^3")));
    EXPECT_EQ(iota_act(w1), -w1);
    for (const auto& p : b.elements) EXPECT_EQ(iota_act(iota_act(p)), p);
}

TEST(Iota, Split) {
    const auto s3 = iota_split(invariant_basis(3));
    EXPECT_EQ(s3.plus_basis.size(), 5u);
    EXPECT_EQ(s3.minus_basis.size(), 0u);

    const auto b = invariant_basis(6);
    const auto s6 = iota_split(b);
    EXPECT_EQ(s6.plus_basis.size() + s6.minus_basis.size(), 43u);
    EXPECT_EQ(s6.plus_basis.size(), 39u);
    EXPECT_EQ(s6.minus_basis.size(), 4u);
    for (const auto& p : s6.plus_basis) EXPECT_EQ(iota_act(p), p);
    for (const auto& p : s6.minus_basis) EXPECT_EQ(iota_act(p), -p);
    const Poly w1 = b.elements[7] - b.elements[6];
    EXPECT_NO_THROW(coefficient_in_basis(w1, s6.minus_basis));
}
