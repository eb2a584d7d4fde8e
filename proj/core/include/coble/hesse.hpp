#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coble/coble_forms.hpp"
#include "coble/prime_field.hpp"

namespace coble {

// plane coordinates X0, X1, X2 are the theta variables Z00, Z01, Z02; lambda is formal unless given
Poly hesse_cubic(const std::optional<Rational>& lambda = std::nullopt);

struct DualSextic {
    Poly a1, a2, a3;  // polynomials in lambda (constants when lambda is given)
    Poly poly;        // S1 + a1 S2 + a2 S3 + a3 S4 in Y0..Y2
};

// a1 = 4 l^3 - 2, a2 = -6 l^2, a3 = -3 l (l^3 - 4)
DualSextic dual_sextic_closed_form(const std::optional<Rational>& lambda = std::nullopt);

// rows of the cusp system A(l) a = rhs(l), entries polynomial in lambda
struct CuspSystem {
    std::array<std::array<Poly, 3>, 3> a;
    std::array<Poly, 3> rhs;
};
const CuspSystem& cusp_system();
// det A(l), a polynomial in lambda
Poly cusp_system_determinant();

// exact solution at a rational lambda; SingularSystem when det A(l) = 0
std::array<Rational, 3> dual_sextic_from_cusp_system(const Rational& lambda);

// residuals of the three printed equations at the closed form (identically in lambda)
IdentityReport verify_cusp_system_identity();

template <class F>
using PlanePoint = std::array<F, 3>;

// (3X0^2 - 3l X1X2, 3X1^2 - 3l X0X2, 3X2^2 - 3l X0X1), normalized to first nonzero = 1
template <class F>
PlanePoint<F> gradient_map(const F& lambda, const PlanePoint<F>& p) {
    const F three = one_like(lambda) + one_like(lambda) + one_like(lambda);
    PlanePoint<F> g{three * (p[0] * p[0] - lambda * p[1] * p[2]), three * (p[1] * p[1] - lambda * p[0] * p[2]),
                    three * (p[2] * p[2] - lambda * p[0] * p[1])};
    for (const auto& c : g)
        if (!is_zero(c)) {
            const F inv = inverse(c);
            for (auto& e : g) e = e * inv;
            return g;
        }
    throw ZeroGradient("gradient vanishes: singular point");
}

template <class F>
PlanePoint<F> normalize_point(PlanePoint<F> p) {
    for (const auto& c : p)
        if (!is_zero(c)) {
            const F inv = inverse(c);
            for (auto& e : p) e = e * inv;
            return p;
        }
    throw PreconditionViolation("zero vector is not a point");
}

// orbit of (0:1:-1) under translations and w-character scalings; 9 distinct points
std::vector<PlanePoint<Eisenstein>> inflection_orbit(const std::optional<Rational>& lambda = std::nullopt);

// f_l and the Hessian determinant vanish on the orbit, identically in lambda
IdentityReport verify_inflection_orbit();

// dF/dY0, dF/dY1, dF/dY2 at (l:1:1) and the second derivative along Y1 = Y2 = 1, identically in lambda
IdentityReport cusp_orbit_check();

struct OracleReport {
    Rational lambda;
    std::uint32_t p = 0;
    bool degenerate = false;         // lambda^3 = 1 mod p: the reduction is singular
    std::uint64_t points = 0;        // projective points on f = 0 over F_p
    std::uint64_t singular_points = 0;
    std::uint64_t checked = 0;       // nonsingular points whose gradient image was tested
    std::vector<std::array<std::uint32_t, 3>> counterexamples;
    bool hasse_ok = false;
    bool pass() const { return !degenerate && counterexamples.empty() && hasse_ok; }
};

// scans every point of P^2(F_p); lambda = 1 or a bad prime throws, a singular reduction mod p is reported
OracleReport finite_field_duality_oracle(const Rational& lambda, std::uint32_t p);

}  // namespace coble
