#include <gtest/gtest.h>

#include <random>

#include "coble/invariants.hpp"
#include "coble_cli/properties.hpp"

using namespace coble;

TEST(Properties, RandomizedSuites) {
    for (std::uint64_t seed : {1ull, 20240611ull}) {
        const auto results = cli::run_property_suites(seed, 200);
        EXPECT_EQ(results.size(), 11u);
        for (const auto& r : results) {
            EXPECT_GE(r.cases, 200) << r.name;
            EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
        }
    }
}

namespace {
Poly random_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(0, 2), e(0, 4), c(-3, 3), n(0, 4);
    Poly p;
    for (int t = n(rng); t > 0; --t) {
        Monomial m;
        for (int k = 0; k < 3; ++k) {
            const int ex = e(rng) / 2;
            if (ex) m.mul_var(theta(0, v(rng)), ex);
        }
        p.add_term(m, Eisenstein(c(rng), c(rng)));
    }
    return p;
}
}  // namespace

TEST(Properties, PolynomialRingAxioms) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_small(rng), b = random_small(rng), c = random_small(rng);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(Properties, OrbitSumsInvariantUnderEveryElement) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d3(0, 2);
    const auto& seeds = sextic_table_seeds();
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const auto g = make_element(d3(rng), {d3(rng), d3(rng)}, {d3(rng), d3(rng)});
        const Poly p = orbit_sum(seeds[pick(rng)]);
        ASSERT_EQ(act_on_polynomial(g, p), p);
    }
}
