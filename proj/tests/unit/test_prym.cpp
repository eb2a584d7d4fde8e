#include <gtest/gtest.h>

#include "coble/prym.hpp"

using namespace coble;

TEST(Dihedral, Identities) {
    for (const auto& c : dihedral_identities()) EXPECT_TRUE(c.pass) << c.name;
    EXPECT_EQ(reflection_j(), (IntMatrix2{{0, -1, -1, 0}}));
    const IntMatrix2 t = rotation_t();
    EXPECT_EQ(t * t * t, IntMatrix2::identity());
    EXPECT_EQ(t * t + t + IntMatrix2::identity(), IntMatrix2{});
    EXPECT_EQ(generated_group().size(), 6u);
}

TEST(Genus, OddDegree) {
    EXPECT_EQ(genus_of_quotient({3, 2, 0}), 1);
    EXPECT_EQ(genus_of_quotient({5, 3, 0}), 4);
    for (long n = 3; n <= 9; n += 2)
        for (long g = 2; g <= 6; ++g) {
            const Rational gn = genus_of_quotient({n, g, 0});
            EXPECT_EQ(gn.get_den(), 1);
            EXPECT_TRUE(prym_dimension_match(n, g).pass);
        }
}

TEST(Genus, EvenDegree) {
    EXPECT_EQ(genus_of_quotient({2, 2, 2}), 1);
    EXPECT_EQ(genus_of_quotient({4, 3, 0}), 5);
    EXPECT_THROW(genus_of_quotient({2, 2, 6}), InadmissibleCover);
    EXPECT_THROW(genus_of_quotient({2, 2, 3}), PreconditionViolation);
    EXPECT_THROW(genus_of_quotient({3, 1, 0}), PreconditionViolation);
}

TEST(DimensionMatch, Examples) {
    const auto a = prym_dimension_match(3, 2);
    EXPECT_EQ(a.prym_dimension, 2);
    EXPECT_EQ(a.twice_genus, 2);
    EXPECT_EQ(prym_dimension_match(7, 2).prym_dimension, 6);
    EXPECT_EQ(prym_dimension_match(3, 5).twice_genus, 8);
    EXPECT_THROW(prym_dimension_match(4, 2), PreconditionViolation);
}

TEST(Polarization, Beta) {
    EXPECT_EQ(polarization_beta_solve(), -1);
    const IntMatrix2 phi = polarization_matrix(-1);
    EXPECT_EQ(phi.det(), 3);
    const IntMatrix2 t = rotation_t();
    EXPECT_EQ(phi * (t * t), t.transpose() * phi);
    const auto ker = polarization_kernel_mod3(phi);
    EXPECT_EQ(ker, (std::vector<std::array<long, 2>>{{0, 0}, {1, 2}, {2, 1}}));
    EXPECT_EQ(phi.mod(3), (IntMatrix2{{2, 2, 2, 2}}));
}
