#include "coble/nu.hpp"

#include <sstream>

#include "coble/digest.hpp"

namespace coble {

ChartMode parse_chart_mode(const std::string& s) {
    if (s == "annexe") return ChartMode::annexe;
    if (s == "all_lifts") return ChartMode::all_lifts;
    throw std::invalid_argument("unknown chart mode " + s);
}

std::string to_string(ChartMode m) { return m == ChartMode::annexe ? "annexe" : "all_lifts"; }

Matrix<Eisenstein> point_action_matrix(const HeisenbergElement& g) { return action_matrix(g).transpose(); }

namespace {

bool fixes(const HeisenbergElement& g, const PlaneVector& v) {
    auto m = point_action_matrix(g);
    std::vector<Eisenstein> vv(v.begin(), v.end());
    return m.apply(vv) == vv;
}

// the lift of chart.eta fixing every basis vector
int find_lift(const FixedPlaneChart& chart) {
    int found = -1;
    for (int t = 0; t < 3; ++t) {
        HeisenbergElement g{t, chart.eta.x, chart.eta.xstar};
        bool all = true;
        for (const auto& v : chart.basis) all = all && fixes(g, v);
        if (all) {
            if (found >= 0) throw EigenspaceDimensionError("chart fixed by two lifts");
            found = t;
        }
    }
    if (found < 0) throw EigenspaceDimensionError("chart " + chart.label + " is not a fixed plane");
    return found;
}

std::string apoint_label(const Apoint& a) { return "(" + to_string(a.x) + "," + to_string(a.xstar) + ")"; }

}  // namespace

FixedPlaneChart diagonal_chart(Index2 rs) {
    FixedPlaneChart c;
    c.family = FixedPlaneChart::Family::diagonal;
    c.direction = rs;
    c.eta = Apoint{Index2(0, 0), rs}.class_rep();
    Index2 gen;
    for (Index2 g : {Index2(1, 0), Index2(0, 1), Index2(1, 1), Index2(1, 2)})
        if (dot(rs, g) == 0) {
            gen = g;
            break;
        }
    for (int k = 0; k < 3; ++k) c.basis[k][(k * gen).theta_var()] = Eisenstein(1);
    c.label = "diag" + to_string(rs);
    c.lift_t = find_lift(c);
    return c;
}

FixedPlaneChart shift_chart(Index2 family, Index2 uv) {
    // {i, j, k, a, b}: Z_ij = w^{u a + v b} Y_k
    struct Entry {
        int i, j, k, a, b;
    };
    static const Entry f01[] = {{0, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 2, 0, 0, 1}, {1, 0, 1, 0, 0}, {1, 1, 1, 1, 0},
                                {1, 2, 1, 2, 1}, {2, 0, 2, 0, 0}, {2, 1, 2, 2, 0}, {2, 2, 2, 1, 1}};
    static const Entry f10[] = {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {2, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {1, 1, 1, 0, 1},
                                {2, 1, 1, 1, 2}, {0, 2, 2, 0, 0}, {1, 2, 2, 0, 2}, {2, 2, 2, 1, 1}};
    static const Entry f11[] = {{0, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {2, 2, 0, 1, 1}, {0, 1, 1, 0, 0}, {2, 0, 1, 1, 0},
                                {1, 2, 1, 0, 1}, {0, 2, 2, 0, 0}, {2, 1, 2, 1, 2}, {1, 0, 2, 0, 2}};
    static const Entry f12[] = {{0, 0, 0, 0, 0}, {1, 2, 0, 0, 0}, {2, 1, 0, 1, 2}, {0, 1, 1, 0, 0}, {2, 2, 1, 1, 1},
                                {1, 0, 1, 0, 1}, {0, 2, 2, 0, 0}, {2, 0, 2, 1, 0}, {1, 1, 2, 0, 2}};
    const Entry* table = nullptr;
    if (family == Index2(0, 1)) table = f01;
    else if (family == Index2(1, 0)) table = f10;
    else if (family == Index2(1, 1)) table = f11;
    else if (family == Index2(1, 2)) table = f12;
    else throw std::invalid_argument("shift family must be 01, 10, 11 or 12");

    FixedPlaneChart c;
    c.family = FixedPlaneChart::Family::shift;
    c.direction = family;
    c.character = uv;
    c.eta = Apoint{family, uv}.class_rep();
    for (int n = 0; n < 9; ++n) {
        const Entry& e = table[n];
        c.basis[e.k][theta(e.i, e.j)] = Eisenstein::omega_pow(uv.i * e.a + uv.j * e.b);
    }
    c.label = "shift" + to_string(family) + "/" + to_string(uv);
    c.lift_t = find_lift(c);
    return c;
}

const std::array<Poly, 4>& plane_sextic_basis() {
    static const std::array<Poly, 4> s = [] {
        Poly y0 = var(ycoord(0)), y1 = var(ycoord(1)), y2 = var(ycoord(2));
        Poly c0 = y0.pow(3), c1 = y1.pow(3), c2 = y2.pow(3);
        return std::array<Poly, 4>{c0 * c0 + c1 * c1 + c2 * c2, c0 * c1 + c0 * c2 + c1 * c2,
                                   y0 * y1 * y2 * (c0 + c1 + c2), (y0 * y1 * y2).pow(2)};
    }();
    return s;
}

Poly restrict_to_chart(const Poly& p, const FixedPlaneChart& chart) {
    std::map<Var, Poly> sigma;
    for (int b = 0; b < 9; ++b) {
        Poly img;
        for (int k = 0; k < 3; ++k)
            if (!chart.basis[k][b].is_zero()) img += var(ycoord(k)).scaled(chart.basis[k][b]);
        sigma[static_cast<Var>(b)] = img;
    }
    return p.substitute(sigma);
}

namespace {

PlaneSexticCoords coordinates_of(const Poly& q, const std::string& where) {
    const Monomial anchors[] = {
        Monomial{{ycoord(0), 6}},
        Monomial{{ycoord(0), 3}, {ycoord(1), 3}},
        Monomial{{ycoord(0), 4}, {ycoord(1), 1}, {ycoord(2), 1}},
        Monomial{{ycoord(0), 2}, {ycoord(1), 2}, {ycoord(2), 2}},
    };
    PlaneSexticCoords c;
    Poly residual = q;
    for (int i = 0; i < 4; ++i) {
        c[i] = q.coeff(anchors[i]);
        residual -= plane_sextic_basis()[i].scaled(c[i]);
    }
    if (!residual.is_zero()) throw NotInSpan("restriction to " + where + " leaves " + to_string(residual));
    return c;
}

}  // namespace

PlaneSexticCoords restrict_sextic(const Poly& p, const FixedPlaneChart& chart) {
    return coordinates_of(restrict_to_chart(p, chart), chart.label);
}

PlaneSexticCoords restrict_sextic_y0_coefficients(const Poly& p, const FixedPlaneChart& chart) {
    std::map<Var, Poly> ones{{ycoord(1), cst(1)}, {ycoord(2), cst(1)}};
    Poly q = restrict_to_chart(p, chart).substitute(ones);
    PlaneSexticCoords c;
    const int powers[] = {2, 3, 4, 6};
    for (int i = 0; i < 4; ++i) c[i] = q.coeff(Monomial{{ycoord(0), powers[i]}});
    return c;
}

std::optional<Matrix<Eisenstein>> induced_plane_action(const FixedPlaneChart& chart, const HeisenbergElement& g) {
    auto m = point_action_matrix(g);
    Matrix<Eisenstein> basis(9, 3);
    for (int k = 0; k < 3; ++k)
        for (int b = 0; b < 9; ++b) basis(b, k) = chart.basis[k][b];
    Matrix<Eisenstein> a(3, 3);
    for (int k = 0; k < 3; ++k) {
        std::vector<Eisenstein> v(chart.basis[k].begin(), chart.basis[k].end());
        auto x = solve_unique(basis, m.apply(v));
        if (!x) return std::nullopt;
        for (int l = 0; l < 3; ++l) a(l, k) = (*x)[l];
    }
    return a;
}

std::vector<Apoint> orthogonal_complement(const Apoint& eta) {
    std::vector<Apoint> out;
    for (int k = 0; k < 81; ++k) {
        Apoint a{Index2(k / 27, k / 9), Index2(k / 3, k)};
        if (weil_form(eta, a) == 0) out.push_back(a);
    }
    return out;
}

namespace {

std::vector<FixedPlaneChart> annexe_charts() {
    std::vector<FixedPlaneChart> out;
    for (Index2 rs : {Index2(0, 1), Index2(1, 0), Index2(1, 1), Index2(1, 2)}) out.push_back(diagonal_chart(rs));
    for (Index2 fam : {Index2(0, 1), Index2(1, 0), Index2(1, 1), Index2(1, 2)})
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v) out.push_back(shift_chart(fam, Index2(u, v)));
    return out;
}

bool sextics_land_in_span(const FixedPlaneChart& c) {
    try {
        for (const auto& t : sextic_table_basis().elements) restrict_sextic(t, c);
    } catch (const NotInSpan&) {
        return false;
    }
    return true;
}

FixedPlaneChart eigenspace_chart(const Apoint& eta, int t) {
    HeisenbergElement g{t, eta.x, eta.xstar};
    Matrix<Eisenstein> m = point_action_matrix(g);
    for (int i = 0; i < 9; ++i) m(i, i) -= Eisenstein(1);
    auto rk = rank_and_kernel(m);
    if (rk.kernel.size() != 3)
        throw EigenspaceDimensionError("lift " + std::to_string(t) + " of " + apoint_label(eta) + " has a " +
                                       std::to_string(rk.kernel.size()) + "-dimensional fixed space");
    FixedPlaneChart c;
    c.eta = eta;
    c.lift_t = t;
    c.family = eta.x.is_zero() ? FixedPlaneChart::Family::diagonal : FixedPlaneChart::Family::shift;
    c.direction = eta.x.is_zero() ? eta.xstar : eta.x;
    c.character = eta.x.is_zero() ? Index2() : eta.xstar;
    for (int k = 0; k < 3; ++k) {
        // scale so the first nonzero entry is 1
        const auto& v = rk.kernel[k];
        Eisenstein lead;
        for (const auto& e : v)
            if (!e.is_zero()) {
                lead = e.inverse();
                break;
            }
        for (int b = 0; b < 9; ++b) c.basis[k][b] = v[b] * lead;
    }
    c.label = "lift" + std::to_string(t) + apoint_label(eta);
    // a phase on the last vector decides whether the K_eta action is the standard one
    const auto last = c.basis[2];
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 9; ++b) c.basis[2][b] = last[b] * Eisenstein::omega_pow(a);
        if (sextics_land_in_span(c)) return c;
    }
    throw NotInSpan("no normalization of " + c.label + " carries invariants into span S1..S4");
}

}  // namespace

std::vector<FixedPlaneChart> fixed_plane_charts(ChartMode mode) {
    if (mode == ChartMode::annexe) return annexe_charts();
    std::vector<FixedPlaneChart> out;
    for (const Apoint& eta : nonzero_classes())
        for (int t = 0; t < 3; ++t) out.push_back(eigenspace_chart(eta, t));
    return out;
}

NuMatrix assemble_nu(ChartMode mode, Coordinates coords) {
    NuMatrix nu;
    nu.charts = fixed_plane_charts(mode);
    const auto basis = sextic_table_basis();
    nu.columns = basis.labels;
    nu.entries = Matrix<Eisenstein>(4 * nu.charts.size(), basis.elements.size());
    for (std::size_t c = 0; c < nu.charts.size(); ++c)
        for (std::size_t j = 0; j < basis.elements.size(); ++j) {
            auto v = coords == Coordinates::sextic_basis ? restrict_sextic(basis.elements[j], nu.charts[c])
                                                         : restrict_sextic_y0_coefficients(basis.elements[j], nu.charts[c]);
            for (int i = 0; i < 4; ++i) nu.entries(4 * c + i, j) = v[i];
        }
    return nu;
}

std::string matrix_hash(const Matrix<Eisenstein>& m) {
    std::ostringstream s;
    s << m.rows() << "x" << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            s << to_string(m(i, j).re()) << "," << to_string(m(i, j).om()) << ";";
        s << "\n";
    }
    return sha256_hex(s.str());
}

std::string to_string(KernelVerdict v) {
    switch (v) {
        case KernelVerdict::four_differences: return "kernel = span{T8-T7, T11-T10, T14-T13, T17-T16}, rank 39";
        case KernelVerdict::three_differences: return "kernel = span{T11-T10, T14-T13, T17-T16}, rank 40";
        default: return "kernel matches neither candidate";
    }
}

std::vector<std::vector<Eisenstein>> candidate_kernel() {
    std::vector<std::vector<Eisenstein>> w;
    for (auto [lo, hi] : {std::pair{7, 8}, {10, 11}, {13, 14}, {16, 17}}) {
        std::vector<Eisenstein> v(43);
        v[hi - 1] = Eisenstein(1);
        v[lo - 1] = Eisenstein(-1);
        w.push_back(v);
    }
    return w;
}

namespace {

bool same_span(const std::vector<std::vector<Eisenstein>>& a, const std::vector<std::vector<Eisenstein>>& b) {
    auto to_matrix = [](const std::vector<std::vector<Eisenstein>>& rows) {
        Matrix<Eisenstein> m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
        return m;
    };
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::size_t ra = rank(to_matrix(a));
    return ra == rank(to_matrix(b)) && ra == rank(to_matrix(both));
}

}  // namespace

NuReport nu_rank_and_kernel(ChartMode mode) {
    NuReport rep;
    NuMatrix nu = assemble_nu(mode);
    rep.rows = nu.entries.rows();
    rep.cols = nu.entries.cols();
    rep.hash = matrix_hash(nu.entries);
    auto rk = rank_and_kernel(nu.entries);
    rep.rank = rk.rank;
    rep.kernel = rk.kernel;
    rep.transpose_rank = rank(nu.entries.transpose());
    rep.rank_nullity = rep.rank + rep.kernel.size() == rep.cols;
    rep.kernel_annihilates = true;
    rep.kernel_iota_anti_invariant = true;
    const auto basis = sextic_table_basis();
    for (const auto& k : rep.kernel) {
        for (const auto& e : nu.entries.apply(k)) rep.kernel_annihilates = rep.kernel_annihilates && e.is_zero();
        Poly p = combine(basis, k);
        rep.kernel_iota_anti_invariant = rep.kernel_iota_anti_invariant && iota_act(p) == -p;
    }
    auto w = candidate_kernel();
    if (same_span(rep.kernel, w))
        rep.verdict = KernelVerdict::four_differences;
    else if (same_span(rep.kernel, {w[1], w[2], w[3]}))
        rep.verdict = KernelVerdict::three_differences;
    rep.y0_coefficient_rank = rank(assemble_nu(mode, Coordinates::y0_coefficients).entries);
    return rep;
}

FilterReport annexe_filter_pipeline() {
    FilterReport rep;
    NuMatrix nu = assemble_nu(ChartMode::annexe);
    std::vector<std::size_t> alive;
    for (std::size_t j = 0; j < nu.entries.cols(); ++j) alive.push_back(j);
    for (std::size_t c = 0; c < 4; ++c) {
        std::vector<std::size_t> next;
        for (auto j : alive) {
            bool vanishes = true;
            for (std::size_t i = 0; i < 4; ++i) vanishes = vanishes && nu.entries(4 * c + i, j).is_zero();
            if (vanishes) next.push_back(j);
        }
        alive = std::move(next);
        rep.surviving_counts.push_back(alive.size());
    }
    rep.survivors = alive;
    std::vector<std::size_t> all(nu.entries.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    rep.diagonal_rank = rank(nu.entries.submatrix(0, 16, all));
    auto shift = nu.entries.submatrix(16, nu.entries.rows() - 16, alive);
    auto rk = rank_and_kernel(shift);
    rep.shift_rank = rk.rank;
    for (const auto& k : rk.kernel) {
        std::vector<Eisenstein> full(nu.entries.cols());
        for (std::size_t i = 0; i < alive.size(); ++i) full[alive[i]] = k[i];
        rep.shift_kernel.push_back(full);
    }
    return rep;
}

LiftReport lift_sensitivity() {
    LiftReport rep;
    NuMatrix lifts = assemble_nu(ChartMode::all_lifts);
    auto annexe = fixed_plane_charts(ChartMode::annexe);
    auto plane_rows = [](const FixedPlaneChart& c) {
        std::vector<std::vector<Eisenstein>> rows;
        for (const auto& v : c.basis) rows.emplace_back(v.begin(), v.end());
        return rows;
    };
    for (const auto& a : annexe) {
        int count = 0, which = -1;
        for (const auto& l : lifts.charts) {
            if (!(l.eta == a.eta)) continue;
            if (same_span(plane_rows(a), plane_rows(l))) {
                ++count;
                which = l.lift_t;
            }
        }
        rep.match_counts.push_back(count);
        rep.matching_lift.push_back(count == 1 ? which : -1);
    }
    std::vector<std::size_t> all(lifts.entries.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    for (int t = 0; t < 3; ++t) {
        Matrix<Eisenstein> m;
        for (std::size_t c = 0; c < lifts.charts.size(); ++c)
            if (lifts.charts[c].lift_t == t) m.append_rows(lifts.entries.submatrix(4 * c, 4, all));
        rep.uniform_lift_rank[t] = rank(m);
    }
    rep.stacked_rank = rank(lifts.entries);
    return rep;
}

}  // namespace coble
