#include "coble/prym.hpp"

#include <set>

#include "coble/errors.hpp"

namespace coble {

IntMatrix2 IntMatrix2::mod(long n) const {
    IntMatrix2 r;
    for (int i = 0; i < 4; ++i) r.a[i] = ((a[i] % n) + n) % n;
    return r;
}

std::string to_string(const IntMatrix2& m) {
    return "[[" + std::to_string(m.a[0]) + "," + std::to_string(m.a[1]) + "],[" + std::to_string(m.a[2]) + "," +
           std::to_string(m.a[3]) + "]]";
}

IntMatrix2 rotation_t() { return {{0, -1, 1, -1}}; }
IntMatrix2 reflection_j_tilde() { return {{1, -1, 0, -1}}; }
IntMatrix2 reflection_j() {
    IntMatrix2 t = rotation_t();
    return -(reflection_j_tilde() * t * t);
}

std::vector<IntMatrix2> generated_group() {
    std::set<IntMatrix2> seen{IntMatrix2::identity()};
    std::vector<IntMatrix2> frontier{IntMatrix2::identity()};
    while (!frontier.empty()) {
        std::vector<IntMatrix2> next;
        for (const auto& m : frontier)
            for (const auto& g : {rotation_t(), reflection_j()}) {
                IntMatrix2 p = m * g;
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<NamedCheck> dihedral_identities() {
    const IntMatrix2 i = IntMatrix2::identity(), t = rotation_t(), jt = reflection_j_tilde(), j = reflection_j();
    const IntMatrix2 zero{};
    return {
        {"T^3 = I", t * t * t == i},
        {"J^2 = I", j * j == i},
        {"J~^2 = I", jt * jt == i},
        {"TJ = JT^2", t * j == j * t * t},
        {"T^2 + T + I = 0", t * t + t + i == zero},
        {"J = [[0,-1],[-1,0]]", j == IntMatrix2{{0, -1, -1, 0}}},
        {"|<T, J>| = 6", generated_group().size() == 6},
    };
}

Rational genus_of_quotient(const CoverParams& p) {
    if (p.n < 2 || p.g < 2) throw PreconditionViolation("need n >= 2 and g >= 2");
    Rational gn;
    if (p.n % 2) {
        gn = ratio((p.n - 1) * (p.g - 1), 2);
    } else {
        if (p.t_size < 0 || p.t_size % 2 || p.t_size > 2 * p.g + 2)
            throw PreconditionViolation("|T| must be even and at most 2g + 2");
        gn = ratio(p.n * (p.g - 1), 2) + 1 - ratio(p.t_size, 2);
    }
    if (gn.get_den() != 1) throw NonIntegralGenus("genus " + to_string(gn));
    if (sgn(gn) < 0) throw InadmissibleCover("genus " + to_string(gn) + " for |T| = " + std::to_string(p.t_size));
    return gn;
}

DimensionMatch prym_dimension_match(long n, long g) {
    if (n % 2 == 0) throw PreconditionViolation("n must be odd");
    DimensionMatch d;
    d.prym_dimension = (n - 1) * (g - 1);
    d.twice_genus = 2 * genus_of_quotient({n, g, 0}).get_num().get_si();
    d.pass = d.prym_dimension == d.twice_genus;
    return d;
}

IntMatrix2 polarization_matrix(long b) { return {{2, b, b, 2}}; }

long polarization_beta_solve() {
    const IntMatrix2 t = rotation_t();
    const IntMatrix2 t_inv = t * t;
    auto defect = [&](long b) {
        IntMatrix2 phi = polarization_matrix(b);
        return phi * t_inv + -(t.transpose() * phi);
    };
    // each entry of the defect is affine in b
    const IntMatrix2 d0 = defect(0), d1 = defect(1);
    bool have = false;
    long beta = 0;
    for (int k = 0; k < 4; ++k) {
        long c = d0.a[k], slope = d1.a[k] - d0.a[k];
        if (slope == 0) {
            if (c != 0) throw NoSolution("inconsistent constant entry");
            continue;
        }
        if (c % slope != 0) throw NoSolution("no integral solution");
        long b = -c / slope;
        if (have && b != beta) throw NoSolution("entries disagree");
        beta = b;
        have = true;
    }
    if (!have) throw NonUnique("every b works");
    return beta;
}

std::vector<std::array<long, 2>> polarization_kernel_mod3(const IntMatrix2& phi) {
    std::vector<std::array<long, 2>> out;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y)
            if ((phi.a[0] * x + phi.a[1] * y) % 3 == 0 && (phi.a[2] * x + phi.a[3] * y) % 3 == 0)
                out.push_back({x, y});
    return out;
}

}  // namespace coble
