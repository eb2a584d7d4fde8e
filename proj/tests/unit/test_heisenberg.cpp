#include <gtest/gtest.h>

#include "coble/invariants.hpp"
#include "coble/prime_field.hpp"

using namespace coble;

namespace {
const Eisenstein w = Eisenstein::omega();
Apoint pt(int a, int b, int c, int d) { return {{a, b}, {c, d}}; }
}  // namespace

TEST(WeilForm, Examples) {
    EXPECT_EQ(weil_form(pt(1, 0, 0, 0), pt(0, 0, 1, 0)), 1);
    EXPECT_EQ(weil_form(pt(0, 1, 1, 0), pt(1, 0, 0, 1)), 0);
    for (int a = 0; a < 81; ++a) {
        const Apoint p = pt(a % 3, a / 3 % 3, a / 9 % 3, a / 27);
        EXPECT_EQ(weil_form(p, p), 0);
    }
}

TEST(WeilForm, Nondegenerate) {
    const std::array<Apoint, 4> e{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1)};
    Matrix<Fp> gram(4, 4, Fp(0, 3));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gram(i, j) = Fp(weil_form(e[i], e[j]), 3);
    EXPECT_EQ(rank(gram), 4u);
}

TEST(Heisenberg, Classes) {
    const auto cls = nonzero_classes();
    EXPECT_EQ(cls.size(), 40u);
    for (const auto& a : cls) EXPECT_EQ(a.class_rep(), a);
    EXPECT_EQ((-pt(1, 2, 0, 1)).class_rep(), pt(1, 2, 0, 1));
}

TEST(Heisenberg, GroupLaw) {
    EXPECT_EQ(group_mul(make_element(1, {0, 0}, {0, 0}), make_element(2, {0, 0}, {0, 0})), identity_element());
    const auto g = make_element(0, {1, 0}, {0, 0});
    EXPECT_TRUE(group_mul(g, group_mul(g, g)).is_central());
    for (const auto& a : nonzero_classes())
        for (const auto& b : nonzero_classes()) {
            const auto c = commutator(make_element(0, a.x, a.xstar), make_element(0, b.x, b.xstar));
            ASSERT_TRUE(c.is_central());
            EXPECT_EQ(c.t, weil_form(a, b));
        }
}

TEST(Heisenberg, ActionOnCoordinates) {
    const auto g = make_element(0, {0, 0}, {1, 0});
    for (int j = 0; j < 3; ++j) {
        EXPECT_EQ(act_on_polynomial(g, X(1, j)), cst(w) * X(1, j));
        EXPECT_EQ(act_on_polynomial(g, X(0, j)), X(0, j));
    }
    const Poly m = X(0, 0) * X(1, 2) * X(2, 1);
    EXPECT_EQ(act_on_polynomial(make_element(1, {0, 0}, {0, 0}), m), cst(w * w * w) * m);
    EXPECT_EQ(act_on_polynomial(make_element(0, {0, 1}, {0, 0}), printed_cubic(0)), printed_cubic(0));
}

TEST(Heisenberg, ActionMatrixColumns) {
    const auto g = make_element(2, {1, 2}, {0, 1});
    const auto m = action_matrix(g);
    for (Index2 b : all_indices()) {
        const auto [e, target] = act_on_coordinate(g, b);
        const int col = b.theta_var(), row = target.theta_var();
        EXPECT_EQ(m(row, col), Eisenstein::omega_pow(e));
    }
}

TEST(Heisenberg, OrbitSums) {
    const Poly f0 = orbit_sum(Monomial{{theta(0, 0), 3}});
    EXPECT_EQ(f0, printed_cubic(0));
    EXPECT_EQ(f0.size(), 9u);
    const Monomial row{{theta(0, 0), 1}, {theta(0, 1), 1}, {theta(0, 2), 1}};
    EXPECT_EQ(translation_stabilizer(row), 3);
    EXPECT_EQ(orbit_sum(row).size(), 3u);
    EXPECT_EQ(orbit_sum_full(row), cst(3) * orbit_sum(row));
    EXPECT_THROW(orbit_sum(Monomial{{theta(0, 0), 2}, {theta(0, 1), 4}}), NotKhatInvariant);
}

TEST(Heisenberg, OrbitSumsAreInvariant) {
    for (const auto& seed : sextic_table_seeds()) {
        const Poly p = orbit_sum(seed);
        EXPECT_TRUE(is_invariant_under_generators(p)) << to_string(seed);
    }
}
