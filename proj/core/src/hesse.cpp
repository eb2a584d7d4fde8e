#include "coble/hesse.hpp"

#include <cmath>
#include <set>

#include "coble/nu.hpp"

namespace coble {

namespace {

Poly L() { return var(kLambda); }
Poly Xp(int k) { return X(0, k); }
Poly num(long c) { return cst(Eisenstein(c)); }

Poly lambda_value(const std::optional<Rational>& lambda) {
    return lambda ? cst(Eisenstein(*lambda)) : L();
}

}  // namespace

Poly hesse_cubic(const std::optional<Rational>& lambda) {
    return Xp(0).pow(3) + Xp(1).pow(3) + Xp(2).pow(3) - num(3) * lambda_value(lambda) * Xp(0) * Xp(1) * Xp(2);
}

DualSextic dual_sextic_closed_form(const std::optional<Rational>& lambda) {
    Poly l = lambda_value(lambda);
    DualSextic d;
    d.a1 = num(4) * l.pow(3) - num(2);
    d.a2 = num(-6) * l.pow(2);
    d.a3 = num(-3) * l * (l.pow(3) - num(4));
    const auto& s = plane_sextic_basis();
    d.poly = s[0] + d.a1 * s[1] + d.a2 * s[2] + d.a3 * s[3];
    return d;
}

const CuspSystem& cusp_system() {
    static const CuspSystem sys = [] {
        Poly l = L();
        CuspSystem c;
        c.a = {{{num(6) * l.pow(2), num(4) * l.pow(3) + num(2), num(2) * l},
                {num(3) * (l.pow(3) + num(1)), l * (l.pow(3) + num(5)), num(2) * l.pow(2)},
                {num(9) * l.pow(2), num(4) * l.pow(3) + num(5), num(4) * l}}};
        c.rhs = {num(-6) * l.pow(5), num(-6), Poly()};
        return c;
    }();
    return sys;
}

Poly cusp_system_determinant() {
    const auto& a = cusp_system().a;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::array<Rational, 3> dual_sextic_from_cusp_system(const Rational& lambda) {
    std::array<Eisenstein, kNumVars> at{};
    at[kLambda] = Eisenstein(lambda);
    const auto& sys = cusp_system();
    Matrix<Eisenstein> a(3, 3);
    std::vector<Eisenstein> b(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a(i, j) = sys.a[i][j].evaluate(at, Eisenstein());
        b[i] = sys.rhs[i].evaluate(at, Eisenstein());
    }
    if (rank(a) < 3) throw SingularSystem("cusp system is singular at lambda = " + to_string(lambda));
    auto x = solve_unique(a, b);
    return {(*x)[0].re(), (*x)[1].re(), (*x)[2].re()};
}

IdentityReport verify_cusp_system_identity() {
    IdentityReport rep;
    auto d = dual_sextic_closed_form();
    const std::array<Poly, 3> a{d.a1, d.a2, d.a3};
    const auto& sys = cusp_system();
    for (int i = 0; i < 3; ++i) {
        Poly r = -sys.rhs[i];
        for (int j = 0; j < 3; ++j) r = r + sys.a[i][j] * a[j];
        rep.require(r.is_zero(), "cusp equation " + std::to_string(i + 1), r);
    }
    return rep;
}

std::vector<PlanePoint<Eisenstein>> inflection_orbit(const std::optional<Rational>& lambda) {
    if (lambda && *lambda * *lambda * *lambda == 1) throw PreconditionViolation("lambda^3 = 1: singular cubic");
    const PlanePoint<Eisenstein> p{Eisenstein(0), Eisenstein(1), Eisenstein(-1)};
    std::vector<PlanePoint<Eisenstein>> out;
    std::set<std::array<Eisenstein, 3>> seen;
    for (int x = 0; x < 3; ++x)
        for (int xs = 0; xs < 3; ++xs) {
            // z_b -> w^{xs (b - x)} z_{b - x}
            PlanePoint<Eisenstein> q;
            for (int b = 0; b < 3; ++b) q[b] = Eisenstein::omega_pow(xs * (b - x)) * p[mod3(b - x)];
            q = normalize_point(q);
            if (seen.insert(q).second) out.push_back(q);
        }
    return out;
}

IdentityReport verify_inflection_orbit() {
    IdentityReport rep;
    Poly f = hesse_cubic();
    std::array<std::array<Poly, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(theta(0, i)).derivative(theta(0, j));
    Poly hess = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    auto orbit = inflection_orbit();
    if (orbit.size() != 9) rep.require(false, "orbit has " + std::to_string(orbit.size()) + " points", Poly());
    for (const auto& q : orbit) {
        std::map<Var, Poly> at;
        for (int k = 0; k < 3; ++k) at[theta(0, k)] = cst(q[k]);
        Poly r1 = f.substitute(at), r2 = hess.substitute(at);
        rep.require(r1.is_zero(), "f at orbit point", r1);
        rep.require(r2.is_zero(), "Hessian at orbit point", r2);
    }
    return rep;
}

IdentityReport cusp_orbit_check() {
    IdentityReport rep;
    Poly s = dual_sextic_closed_form().poly;
    std::map<Var, Poly> at{{ycoord(0), L()}, {ycoord(1), num(1)}, {ycoord(2), num(1)}};
    for (int k = 0; k < 3; ++k) {
        Poly r = s.derivative(ycoord(k)).substitute(at);
        rep.require(r.is_zero(), "dF/dY" + std::to_string(k) + " at (l:1:1)", r);
    }
    std::map<Var, Poly> line{{ycoord(1), num(1)}, {ycoord(2), num(1)}};
    Poly along = s.substitute(line);
    std::map<Var, Poly> y0{{ycoord(0), L()}};
    Poly r2 = along.derivative(ycoord(0)).derivative(ycoord(0)).substitute(y0);
    rep.require(r2.is_zero(), "second derivative along Y1 = Y2", r2);
    return rep;
}

OracleReport finite_field_duality_oracle(const Rational& lambda, std::uint32_t p) {
    if (lambda == 1) throw PreconditionViolation("lambda = 1: singular member of the pencil");
    PrimeField fp(p);
    OracleReport rep;
    rep.lambda = lambda;
    rep.p = p;
    const Fp l = fp.from_rational(lambda);
    rep.degenerate = (l * l * l) == fp(1);

    // F_l with coefficients reduced mod p
    auto d = dual_sextic_closed_form(lambda);
    std::vector<std::pair<std::array<int, 3>, Fp>> terms;
    for (const auto& [m, c] : d.poly.terms())
        terms.push_back({{m.exp(ycoord(0)), m.exp(ycoord(1)), m.exp(ycoord(2))}, fp.from_rational(c.re())});
    auto dual_at = [&](const PlanePoint<Fp>& y) {
        std::array<std::array<Fp, 7>, 3> pw;
        for (int k = 0; k < 3; ++k) {
            pw[k][0] = fp(1);
            for (int e = 1; e < 7; ++e) pw[k][e] = pw[k][e - 1] * y[k];
        }
        Fp s = fp(0);
        for (const auto& [e, c] : terms) s += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
        return s;
    };
    const Fp three = fp(3);
    auto visit = [&](const PlanePoint<Fp>& x) {
        Fp f = x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2] - three * l * x[0] * x[1] * x[2];
        if (!f.is_zero()) return;
        ++rep.points;
        PlanePoint<Fp> g;
        try {
            g = gradient_map(l, x);
        } catch (const ZeroGradient&) {
            ++rep.singular_points;
            return;
        }
        ++rep.checked;
        if (!dual_at(g).is_zero()) rep.counterexamples.push_back({x[0].value(), x[1].value(), x[2].value()});
    };
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) visit({fp(1), fp(a), fp(b)});
    for (std::uint32_t b = 0; b < p; ++b) visit({fp(0), fp(1), fp(b)});
    visit({fp(0), fp(0), fp(1)});
    const double dev = static_cast<double>(rep.points) - static_cast<double>(p) - 1.0;
    rep.hasse_ok = dev * dev <= 4.0 * p;
    return rep;
}

}  // namespace coble
