#include <gtest/gtest.h>

#include "coble/hesse.hpp"
#include "coble/nu.hpp"

using namespace coble;

namespace {
Poly Y(int k) { return var(ycoord(k)); }
Eisenstein constant(const Poly& p) { return p.coeff(Monomial{}); }
}  // namespace

TEST(DualSextic, ClosedForm) {
    const DualSextic d0 = dual_sextic_closed_form(Rational(0));
    const Poly expected = Y(0).pow(6) + Y(1).pow(6) + Y(2).pow(6) -
                          cst(2) * (Y(0).pow(3) * Y(1).pow(3) + Y(0).pow(3) * Y(2).pow(3) + Y(1).pow(3) * Y(2).pow(3));
    EXPECT_EQ(d0.poly, expected);
    EXPECT_EQ(constant(dual_sextic_closed_form(Rational(1)).a2), Eisenstein(-6));
    EXPECT_EQ(constant(dual_sextic_closed_form(Rational(2)).a3), Eisenstein(-24));
}

TEST(DualSextic, PlaneSymmetries) {
    const Poly f = dual_sextic_closed_form().poly;
    std::map<Var, Poly> swap{{ycoord(0), Y(1)}, {ycoord(1), Y(0)}};
    EXPECT_EQ(f.substitute(swap), f);
    const Eisenstein w = Eisenstein::omega();
    std::map<Var, Poly> twist{{ycoord(1), cst(w) * Y(1)}, {ycoord(2), cst(w * w) * Y(2)}};
    EXPECT_EQ(f.substitute(twist), f);
    std::map<Var, Poly> cycle{{ycoord(0), Y(1)}, {ycoord(1), Y(2)}, {ycoord(2), Y(0)}};
    EXPECT_EQ(f.substitute(cycle), f);
}

TEST(CuspSystem, SolvesToClosedForm) {
    const auto a = dual_sextic_from_cusp_system(Rational(2));
    EXPECT_EQ(a[0], 30);
    EXPECT_EQ(a[1], -24);
    EXPECT_EQ(a[2], -24);
    for (long l : {-3, -1, 3, 5, 7}) {
        const auto s = dual_sextic_from_cusp_system(Rational(l));
        const auto c = dual_sextic_closed_form(Rational(l));
        EXPECT_EQ(Eisenstein(s[0]), constant(c.a1));
        EXPECT_EQ(Eisenstein(s[1]), constant(c.a2));
        EXPECT_EQ(Eisenstein(s[2]), constant(c.a3));
    }
    EXPECT_THROW(dual_sextic_from_cusp_system(Rational(0)), SingularSystem);
}

TEST(CuspSystem, IdentityInLambda) {
    EXPECT_TRUE(verify_cusp_system_identity().pass);
    EXPECT_TRUE(cusp_orbit_check().pass);
    EXPECT_FALSE(cusp_system_determinant().is_zero());
}

TEST(GradientMap, Examples) {
    const Rational l = 7;
    const auto g = gradient_map(l, PlanePoint<Rational>{0, 1, -1});
    EXPECT_EQ(normalize_point(g), normalize_point(PlanePoint<Rational>{l, 1, 1}));
    const auto fermat = gradient_map(Rational(0), PlanePoint<Rational>{1, -1, 0});
    EXPECT_EQ(fermat, (PlanePoint<Rational>{1, 1, 0}));
    EXPECT_THROW(gradient_map(Rational(1), PlanePoint<Rational>{1, 1, 1}), ZeroGradient);
}

TEST(Inflection, Orbit) {
    const auto orbit = inflection_orbit(Rational(2));
    EXPECT_EQ(orbit.size(), 9u);
    const PlanePoint<Eisenstein> p{Eisenstein(0), Eisenstein(1), Eisenstein(-1)};
    EXPECT_NE(std::find(orbit.begin(), orbit.end(), p), orbit.end());
    EXPECT_TRUE(verify_inflection_orbit().pass);
    EXPECT_THROW(inflection_orbit(Rational(1)), PreconditionViolation);
}

TEST(Oracle, SmoothMembersPass) {
    for (auto [l, p] : std::vector<std::pair<long, std::uint32_t>>{{2, 997}, {0, 13}, {2, 13}, {2, 31}, {3, 31}}) {
        const OracleReport r = finite_field_duality_oracle(Rational(l), p);
        EXPECT_FALSE(r.degenerate);
        EXPECT_TRUE(r.counterexamples.empty()) << l << " " << p;
        EXPECT_TRUE(r.hasse_ok) << l << " " << p;
        EXPECT_EQ(r.singular_points, 0u);
        EXPECT_TRUE(r.pass());
    }
    EXPECT_EQ(finite_field_duality_oracle(Rational(0), 13).points, 9u);
}

TEST(Oracle, SingularReductionIsReported) {
    // 3^3 = 27 = 1 mod 13: the reduction is a triangle of lines
    const OracleReport r = finite_field_duality_oracle(Rational(3), 13);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.points, 39u);
    EXPECT_EQ(r.singular_points, 3u);
    EXPECT_TRUE(r.counterexamples.empty());
    EXPECT_FALSE(r.hasse_ok);
    EXPECT_FALSE(r.pass());
}

TEST(Oracle, Preconditions) {
    EXPECT_THROW(finite_field_duality_oracle(Rational(1), 13), PreconditionViolation);
    EXPECT_THROW(finite_field_duality_oracle(Rational(2), 11), PreconditionViolation);
    EXPECT_THROW(finite_field_duality_oracle(ratio(1, 13), 13), DivisionByZero);
}
