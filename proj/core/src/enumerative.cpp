#include "coble/enumerative.hpp"

#include <cmath>
#include <numbers>

#include "coble/bernoulli.hpp"
#include "coble/errors.hpp"

namespace coble {

IntersectionTable derive_intersection_table(const BlowupData& d) {
    // h^2 xi^5 = h^2 * (fibre degree); h xi^6 and xi^7 from the relation
    const Integer h2xi5 = d.h_squared * d.fibre_degree;
    const Integer hxi6 = d.relation_a * h2xi5;  // h^3 = 0 kills the b-term
    const Integer xi7 = d.relation_a * hxi6 + d.relation_b * h2xi5;
    IntersectionTable t;
    t.value[8] = 1;
    t.value[2] = h2xi5;
    t.value[1] = hxi6;
    t.value[0] = xi7;
    return t;
}

IntersectionTable reference_intersection_table() {
    IntersectionTable t;
    t.value[8] = 1;
    t.value[2] = -18;
    t.value[1] = -162;
    t.value[0] = -810;
    return t;
}

IntersectionClass dual_degree_class() {
    // polynomials in (H, e) of degree n stored by the power of H
    std::vector<Integer> p{Integer(1)};
    auto times = [&](const Integer& h, const Integer& e) {
        std::vector<Integer> q(p.size() + 1, Integer(0));
        for (std::size_t r = 0; r < p.size(); ++r) {
            q[r + 1] += h * p[r];
            q[r] += e * p[r];
        }
        p = std::move(q);
    };
    for (int i = 0; i < 7; ++i) times(2, -1);
    times(3, -2);
    IntersectionClass cls;
    for (int r = 0; r <= 8; ++r) cls.c[r] = p[r];
    return cls;
}

Integer evaluate(const IntersectionClass& cls, const IntersectionTable& table) {
    Integer s = 0;
    for (int r = 0; r <= 8; ++r) s += cls.c[r] * table.value[r];
    return s;
}

Integer dual_degree_computation() { return evaluate(dual_degree_class(), derive_intersection_table()); }

namespace {

double pairwise_sum(const double* a, std::size_t n) {
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += a[i];
        return s;
    }
    return pairwise_sum(a, n / 2) + pairwise_sum(a + n / 2, n - n / 2);
}

}  // namespace

double verlinde_v111(int m) {
    std::vector<double> terms;
    const double pi = std::numbers::pi;
    for (int a = 1; a < m; ++a)
        for (int b = 1; a + b <= m - 1; ++b) {
            double s = std::sin(pi * a / m) * std::sin(pi * b / m) * std::sin(pi * (a + b) / m);
            terms.push_back(1.0 / (s * s));
        }
    return pairwise_sum(terms.data(), terms.size());
}

VerlindeValue verlinde_dimension(int k) {
    if (k < 0) throw std::invalid_argument("negative level");
    if (k > 12) throw std::invalid_argument("level above 12 is outside the tolerance budget");
    const double m = k + 3;
    VerlindeValue v;
    v.value = 3.0 * (m / 8.0) * (m / 8.0) * verlinde_v111(k + 3);
    v.nearest = std::lround(v.value);
    if (std::abs(v.value - static_cast<double>(v.nearest)) > 1e-6 * std::max(1.0, std::abs(v.value)))
        throw NonIntegralDimension("level " + std::to_string(k) + " gives " + std::to_string(v.value));
    return v;
}

Integer verlinde_finite_difference(int order) {
    std::vector<Integer> d;
    for (int k = 1; k <= order + 1; ++k) d.emplace_back(verlinde_dimension(k).nearest);
    for (int n = 0; n < order; ++n)
        for (std::size_t i = 0; i + 1 < d.size() - n; ++i) d[i] = d[i + 1] - d[i];
    return d[0];
}

Integer theta_degree_from_verlinde() { return verlinde_finite_difference(8); }

Rational zagier_leading_coefficient(int h) {
    if (h < 1) throw std::invalid_argument("h must be positive");
    Rational s = 0;
    for (int r = 0; r <= h; ++r) {
        Integer f1, f2;
        mpz_fac_ui(f1.get_mpz_t(), 2 * r);
        mpz_fac_ui(f2.get_mpz_t(), 6 * h - 2 * r);
        s += Rational(binomial(4 * h - 2 * r - 1, 2 * h - 1)) * bernoulli(2 * r) / Rational(f1) *
             bernoulli(6 * h - 2 * r) / Rational(f2);
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 6 * h);
    Rational out = s * Rational(scale);
    return h % 2 ? Rational(-out) : out;
}

Integer quadric_dimension_count() { return binomial(10, 2) - 36; }

std::pair<int, int> ramification_degree() {
    const int canonical_m = -6, canonical_p8 = -9;
    const int delta = canonical_m - canonical_p8;
    return {delta, 2 * delta};
}

}  // namespace coble
