#include <gtest/gtest.h>

#include "coble/coble_forms.hpp"
#include "coble/invariants.hpp"

using namespace coble;

namespace {
Poly B(int k) { return var(beta(k)); }
Poly Zo(int k) { return var(zodd(k)); }
}  // namespace

TEST(CobleCubic, Coefficients) {
    const Poly f = coble_cubic();
    EXPECT_EQ(f.coeff(Monomial{{beta(0), 1}, {theta(0, 0), 3}}), Eisenstein(1));
    EXPECT_EQ(f.coeff(Monomial{{beta(1), 1}, {theta(0, 0), 1}, {theta(0, 1), 1}, {theta(0, 2), 1}}), Eisenstein(3));
    EXPECT_EQ(f.size(), 21u);
    Poly sum;
    for (int k = 0; k < 5; ++k) sum += B(k) * printed_cubic(k);
    EXPECT_EQ(f, sum);
    EXPECT_TRUE(is_invariant_under_generators(f));
    EXPECT_EQ(iota_act(f), f);
}

TEST(BarthQuadrics, PrintedForms) {
    const auto& q = barth_quadrics();
    EXPECT_EQ(q[theta(0, 0)], B(0) * X(0, 0).pow(2) + B(1) * X(0, 1) * X(0, 2) + B(2) * X(1, 0) * X(2, 0) +
                                  B(3) * X(1, 1) * X(2, 2) + B(4) * X(1, 2) * X(2, 1));
    EXPECT_EQ(q[theta(2, 2)].coeff(Monomial{{beta(4), 1}, {theta(0, 1), 1}, {theta(1, 0), 1}}), Eisenstein(1));
    for (const auto& qb : q) EXPECT_EQ(qb.size(), 5u);
}

TEST(BarthQuadrics, DerivativeIdentity) {
    const auto rep = verify_derivative_identity();
    EXPECT_TRUE(rep.pass) << (rep.failures.empty() ? "" : rep.failures[0]);
    const Poly f = coble_cubic();
    Poly euler;
    for (int v = 0; v < kNumTheta; ++v) euler += var(static_cast<Var>(v)) * f.derivative(static_cast<Var>(v));
    EXPECT_EQ(euler, cst(3) * f);
}

TEST(BarthQuadrics, CovarianceAndRank) {
    EXPECT_TRUE(verify_quadric_covariance().pass);
    EXPECT_EQ(barth_quadric_rank(), 9u);
}

TEST(CobleCubic, EtaPlaneRestriction) {
    const Poly r = restrict_to_eta_plane();
    EXPECT_EQ(r, expected_eta_restriction());
    EXPECT_EQ(r.coeff(Monomial{{beta(1), 1}, {theta(0, 0), 1}, {theta(0, 1), 1}, {theta(0, 2), 1}}), Eisenstein(3));
    EXPECT_EQ(r.coeff(Monomial{{beta(0), 1}, {theta(0, 0), 3}}), Eisenstein(1));
    for (int k = 2; k < 5; ++k) EXPECT_FALSE(r.uses(beta(k)));
}

TEST(YZChart, MinusSpace) {
    const auto ms = minus_space_restriction();
    EXPECT_EQ(ms.restricted[theta(0, 0)],
              -(B(1) * Zo(1).pow(2) + B(2) * Zo(2).pow(2) + B(3) * Zo(3).pow(2) + B(4) * Zo(4).pow(2)));
    EXPECT_TRUE(ms.first_row_matches);
    EXPECT_EQ(ms.restricted_rank, 5u);
    EXPECT_EQ(ms.printed_rank, 5u);
    EXPECT_TRUE(ms.span_equal);
    std::vector<Poly> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(steiner_row_form(i));
    EXPECT_NO_THROW(coefficient_in_basis(ms.restricted[theta(0, 1)] + ms.restricted[theta(0, 2)], rows));
}

TEST(YZChart, PrintedBarthForms) {
    const auto r = check_barth_yz_forms();
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.outside.empty());
}

TEST(Steiner, Ranks) {
    const auto a = steiner_matrix({Eisenstein(1), Eisenstein(0), Eisenstein(0), Eisenstein(0)});
    EXPECT_EQ(a.rank, 2u);
    EXPECT_FALSE(a.point.has_value());

    const auto b = steiner_matrix({Eisenstein(1), Eisenstein(2), Eisenstein(3), Eisenstein(5)});
    ASSERT_EQ(b.rank, 4u);
    ASSERT_TRUE(b.point.has_value());
    const auto image = b.matrix.apply(*b.point);
    for (const auto& e : image) EXPECT_TRUE(is_zero(e));

    const Eisenstein w = Eisenstein::omega();
    const std::array<Eisenstein, 4> z{Eisenstein(1), Eisenstein(2), Eisenstein(3), Eisenstein(5)};
    const auto scaled = steiner_matrix({w * z[0], w * z[1], w * z[2], w * z[3]});
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(scaled.matrix(i, j), w * w * b.matrix(i, j));
}
