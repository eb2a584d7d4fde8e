#include "coble/coble_forms.hpp"

#include "coble/invariants.hpp"

namespace coble {

namespace {

Poly B(int k) { return var(beta(k)); }
Poly Y(int k) { return var(ycoord(k)); }
Poly Zo(int k) { return var(zodd(k)); }

}  // namespace

Poly coble_cubic() {
    Poly f;
    for (int k = 0; k < 5; ++k) f += B(k) * printed_cubic(k);
    return f;
}

const std::array<Poly, 9>& barth_quadrics() {
    static const std::array<Poly, 9> q = [] {
        // {b, (i,j) pairs for b1..b4}; b0 multiplies X_b^2
        struct Row {
            int b;
            int p[4][4];
        };
        const Row rows[] = {
            {0, {{0, 1, 0, 2}, {1, 0, 2, 0}, {1, 1, 2, 2}, {1, 2, 2, 1}}},
            {1, {{0, 2, 0, 0}, {1, 1, 2, 1}, {1, 2, 2, 0}, {1, 0, 2, 2}}},
            {2, {{0, 0, 0, 1}, {1, 2, 2, 2}, {1, 0, 2, 1}, {1, 1, 2, 0}}},
            {3, {{1, 1, 1, 2}, {2, 0, 0, 0}, {2, 1, 0, 2}, {2, 2, 0, 1}}},
            {4, {{1, 2, 1, 0}, {2, 1, 0, 1}, {2, 2, 0, 0}, {2, 0, 0, 2}}},
            {5, {{1, 0, 1, 1}, {2, 2, 0, 2}, {2, 0, 0, 1}, {2, 1, 0, 0}}},
            {6, {{2, 1, 2, 2}, {0, 0, 1, 0}, {0, 1, 1, 2}, {0, 2, 1, 1}}},
            {7, {{2, 2, 2, 0}, {0, 1, 1, 1}, {0, 2, 1, 0}, {0, 0, 1, 2}}},
            {8, {{2, 0, 2, 1}, {0, 2, 1, 2}, {0, 0, 1, 1}, {0, 1, 1, 0}}},
        };
        std::array<Poly, 9> out;
        for (const auto& r : rows) {
            Poly p = B(0) * X(r.b / 3, r.b % 3).pow(2);
            for (int k = 0; k < 4; ++k)
                p += B(k + 1) * X(r.p[k][0], r.p[k][1]) * X(r.p[k][2], r.p[k][3]);
            out[r.b] = p;
        }
        return out;
    }();
    return q;
}

IdentityReport verify_derivative_identity() {
    IdentityReport rep;
    const Poly f = coble_cubic();
    const auto& q = barth_quadrics();
    Poly sum, euler;
    for (Index2 b : all_indices()) {
        Var v = b.theta_var();
        Poly d = f.derivative(v);
        Poly res = d - q[v].scaled(Eisenstein(3));
        rep.require(res.is_zero(), "dF/dX" + to_string(b) + " - 3Q" + to_string(b), res);
        sum += var(v) * q[v];
        euler += var(v) * d;
    }
    Poly r1 = sum - f;
    rep.require(r1.is_zero(), "sum X_b Q_b - F", r1);
    Poly r2 = euler - f.scaled(Eisenstein(3));
    rep.require(r2.is_zero(), "sum X_b dF/dX_b - 3F", r2);
    return rep;
}

Poly restrict_to_eta_plane() {
    std::map<Var, Poly> zero;
    for (int i = 1; i < 3; ++i)
        for (int j = 0; j < 3; ++j) zero[theta(i, j)] = Poly();
    return coble_cubic().substitute(zero);
}

Poly expected_eta_restriction() {
    return B(0) * (X(0, 0).pow(3) + X(0, 1).pow(3) + X(0, 2).pow(3)) +
           B(1).scaled(Eisenstein(3)) * X(0, 0) * X(0, 1) * X(0, 2);
}

std::map<Var, Poly> yz_chart() {
    std::map<Var, Poly> s;
    s[theta(0, 0)] = Y(0);
    const Index2 reps[] = {Index2(0, 1), Index2(1, 0), Index2(1, 1), Index2(1, 2)};
    for (int k = 1; k <= 4; ++k) {
        Index2 a = reps[k - 1];
        s[a.theta_var()] = Y(k) + Zo(k);
        s[(-a).theta_var()] = Y(k) - Zo(k);
    }
    return s;
}

const std::array<std::array<Poly, 5>, 5>& steiner_quadrics() {
    static const std::array<std::array<Poly, 5>, 5> m = [] {
        auto sq = [](int k) { return Zo(k).pow(2); };
        auto pr = [](int a, int b) { return Zo(a) * Zo(b); };
        Poly o;
        return std::array<std::array<Poly, 5>, 5>{{
            {o, -sq(1), -sq(2), -sq(3), -sq(4)},
            {sq(1), o, -pr(3, 4), -pr(2, 4), -pr(2, 3)},
            {sq(2), pr(3, 4), o, pr(1, 4), -pr(1, 3)},
            {sq(3), pr(2, 4), -pr(1, 4), o, pr(1, 2)},
            {sq(4), pr(2, 3), pr(1, 3), -pr(1, 2), o},
        }};
    }();
    return m;
}

Poly steiner_row_form(int i) {
    Poly r;
    for (int j = 0; j < 5; ++j) r += steiner_quadrics()[i][j] * B(j);
    return r;
}

const std::array<Poly, 9>& barth_yz_quadrics() {
    static const std::array<Poly, 9> q = [] {
        auto yy = [](int a, int b) { return Y(a) * Y(b); };
        const std::array<std::array<Poly, 5>, 5> ym{{
            {yy(0, 0), yy(1, 1), yy(2, 2), yy(3, 3), yy(4, 4)},
            {yy(1, 1), yy(0, 1), yy(3, 4), yy(2, 4), yy(2, 3)},
            {yy(2, 2), yy(3, 4), yy(0, 2), yy(1, 4), yy(1, 3)},
            {yy(3, 3), yy(2, 4), yy(1, 4), yy(0, 3), yy(1, 2)},
            {yy(4, 4), yy(2, 3), yy(1, 3), yy(1, 2), yy(0, 4)},
        }};
        std::array<Poly, 9> out;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) out[i] += (ym[i][j] + steiner_quadrics()[i][j]) * B(j);
        auto bz = [](int b, int z) { return B(b) * Zo(z); };
        const Poly two(Monomial{}, Eisenstein(2));
        const std::array<std::array<Poly, 5>, 4> mixed{{
            {-bz(1, 1), two * bz(0, 1), bz(3, 4) - bz(4, 3), bz(4, 2) - bz(2, 4), bz(2, 3) - bz(3, 2)},
            {-bz(2, 2), -bz(3, 4) - bz(4, 3), two * bz(0, 2), bz(1, 4) + bz(4, 1), bz(1, 3) - bz(3, 1)},
            {-bz(3, 3), -bz(2, 4) - bz(4, 2), bz(1, 4) - bz(4, 1), two * bz(0, 3), bz(1, 2) + bz(2, 1)},
            {-bz(4, 4), -bz(2, 3) - bz(3, 2), bz(1, 3) + bz(3, 1), bz(1, 2) - bz(2, 1), two * bz(0, 4)},
        }};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) out[5 + i] += mixed[i][j] * Y(j);
        return out;
    }();
    return q;
}

MinusSpaceReport minus_space_restriction() {
    MinusSpaceReport rep;
    auto chart = yz_chart();
    std::map<Var, Poly> kill_y;
    for (int k = 0; k < 5; ++k) kill_y[ycoord(k)] = Poly();
    std::vector<Poly> restricted, printed;
    for (int b = 0; b < 9; ++b) {
        rep.restricted[b] = barth_quadrics()[b].substitute(chart).substitute(kill_y);
        restricted.push_back(rep.restricted[b]);
    }
    for (int i = 0; i < 5; ++i) printed.push_back(steiner_row_form(i));
    rep.first_row_matches = rep.restricted[0] == printed[0];
    rep.restricted_rank = polynomial_rank(restricted);
    rep.printed_rank = polynomial_rank(printed);
    std::vector<Poly> joint = restricted;
    joint.insert(joint.end(), printed.begin(), printed.end());
    rep.joint_rank = polynomial_rank(joint);
    rep.span_equal = rep.restricted_rank == rep.printed_rank && rep.joint_rank == rep.printed_rank;
    for (int b = 0; b < 9; ++b) {
        std::vector<Poly> test = printed;
        test.push_back(rep.restricted[b]);
        if (polynomial_rank(test) != rep.printed_rank) rep.outside.push_back("Q" + to_string(Index2::from_theta(b)));
    }
    return rep;
}

YZBlockReport check_barth_yz_forms() {
    YZBlockReport rep;
    auto chart = yz_chart();
    std::vector<Poly> rewritten;
    for (const auto& q : barth_quadrics()) rewritten.push_back(q.substitute(chart));
    const std::size_t base = polynomial_rank(rewritten);
    std::vector<Poly> printed(barth_yz_quadrics().begin(), barth_yz_quadrics().end());
    rep.printed_rank = polynomial_rank(printed);
    for (int i = 0; i < 9; ++i) {
        auto test = rewritten;
        test.push_back(printed[i]);
        if (polynomial_rank(test) != base) rep.outside.push_back(i + 1);
    }
    rep.pass = rep.outside.empty() && rep.printed_rank == 9 && base == 9;
    return rep;
}

SteinerResult steiner_matrix(const std::array<Eisenstein, 4>& z) {
    bool nonzero = false;
    for (const auto& c : z) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw PreconditionViolation("z = 0 is not a point");
    std::array<Eisenstein, kNumVars> values{};
    for (int k = 1; k <= 4; ++k) values[zodd(k)] = z[k - 1];
    SteinerResult out;
    out.matrix = Matrix<Eisenstein>(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out.matrix(i, j) = steiner_quadrics()[i][j].evaluate(values, Eisenstein());
    auto rk = rank_and_kernel(out.matrix);
    out.rank = rk.rank;
    if (rk.rank == 4) out.point = rk.kernel.front();
    return out;
}

IdentityReport verify_quadric_covariance() {
    IdentityReport rep;
    const auto& q = barth_quadrics();
    for (const auto& g : generators()) {
        for (Index2 b : all_indices()) {
            Index2 target = b - g.x;
            Poly expected = q[target.theta_var()].scaled(Eisenstein::omega_pow(2 * g.t + 2 * dot(g.xstar, target)));
            Poly res = act_on_polynomial(g, q[b.theta_var()]) - expected;
            rep.require(res.is_zero(), "covariance of Q" + to_string(b), res);
        }
    }
    return rep;
}

std::size_t barth_quadric_rank() {
    // specialization can only drop the rank, and 9 is the maximum
    std::size_t best = 0;
    const long specs[2][5] = {{1, 1, 1, 1, 1}, {2, -3, 5, 7, -11}};
    for (const auto& s : specs) {
        std::map<Var, Poly> sub;
        for (int k = 0; k < 5; ++k) sub[beta(k)] = cst(Eisenstein(s[k]));
        std::vector<Poly> qs;
        for (const auto& q : barth_quadrics()) qs.push_back(q.substitute(sub));
        best = std::max(best, polynomial_rank(qs));
    }
    return best;
}

}  // namespace coble
