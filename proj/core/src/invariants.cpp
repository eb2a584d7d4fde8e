#include "coble/invariants.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace coble {

long invariant_dimension(int d) {
    if (d < 0 || d % 3 != 0) throw DegreeNotDivisibleBy3("degree " + std::to_string(d));
    Integer num = 80 * binomial(d / 3 + 2, 2) + binomial(d + 8, 8);
    if (num % 81 != 0) throw InternalCountMismatch("trace formula is not integral");
    return Integer(num / 81).get_si();
}

namespace {

void for_each_monomial(int d, const std::function<void(const Monomial&)>& f) {
    std::array<int, kNumTheta> e{};
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == kNumTheta - 1) {
            e[v] = left;
            Monomial m;
            for (int k = 0; k < kNumTheta; ++k)
                if (e[k]) m.mul_var(static_cast<Var>(k), e[k]);
            f(m);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[v] = k;
            rec(v + 1, left - k);
        }
    };
    rec(0, d);
}

}  // namespace

long count_invariant_orbits(int d) {
    if (d < 0 || d % 3 != 0) throw DegreeNotDivisibleBy3("degree " + std::to_string(d));
    std::set<Monomial, GrlexDesc> reps;
    for_each_monomial(d, [&](const Monomial& m) {
        if (!index_sum(m).is_zero()) return;
        // orbit representative: the largest translate
        Poly orbit = orbit_sum(m);
        reps.insert(orbit.terms().begin()->first);
    });
    return static_cast<long>(reps.size());
}

Monomial parse_theta_monomial(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    Monomial m;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] < '0' || tok[0] > '2' || tok[1] < '0' || tok[1] > '2')
            throw std::invalid_argument("bad theta token " + tok);
        int e = 1;
        if (tok.size() > 2) {
            if (tok[2] != '^') throw std::invalid_argument("bad theta token " + tok);
            e = std::stoi(tok.substr(3));
        }
        m.mul_var(theta(tok[0] - '0', tok[1] - '0'), e);
    }
    return m;
}

Poly printed_cubic(int k) {
    static const Index2 dirs[] = {Index2(0, 1), Index2(1, 0), Index2(1, 1), Index2(1, 2)};
    if (k < 0 || k > 4) throw std::out_of_range("cubic index");
    Poly r;
    for (Index2 b : all_indices()) {
        if (k == 0) {
            r += X(b.i, b.j).pow(3);
            continue;
        }
        Index2 a = dirs[k - 1];
        Index2 b1 = b + a, b2 = b + 2 * a;
        r += X(b.i, b.j) * X(b1.i, b1.j) * X(b2.i, b2.j);
    }
    return r;
}

const std::vector<Monomial>& sextic_table_seeds() {
    static const std::vector<Monomial> seeds = [] {
        const char* table[] = {
            "00^6",
            "00^3 01^3", "00^3 10^3", "00^3 11^3", "00^3 12^3",
            "00^4 01 02", "00 01 02 10^3", "00 01 02 20^3",
            "00^4 10 20", "00 10 20 01^3", "00 10 20 02^3",
            "00^4 11 22", "00 11 22 01^3", "00 11 22 02^3",
            "00^4 12 21", "00 12 21 10^3", "00 12 21 20^3",
            "00^2 01^2 02^2", "00^2 10^2 20^2", "00^2 11^2 22^2", "00^2 21^2 12^2",
            "00 01 02 10 11 12", "00 10 20 01 11 21", "00 11 22 01 12 20", "00 12 21 01 10 22",
            "00^2 01 11 12^2", "00^2 02 12 11^2", "00^2 11 21 02^2", "00^2 10 11 21^2",
            "00^2 10 12 22^2", "00^2 11 12 20^2", "00^2 01 12 10^2", "00^2 02 11 10^2",
            "00^2 10 21 01^2", "00^2 10 22 02^2", "00^2 10 01 11^2", "00^2 01 20 21^2",
            "00^2 01 02 10 20", "00^2 01 02 11 22", "00^2 01 02 12 21",
            "00^2 10 20 11 22", "00^2 10 20 12 21", "00^2 11 22 12 21",
        };
        std::vector<Monomial> out;
        for (const char* s : table) out.push_back(parse_theta_monomial(s));
        return out;
    }();
    return seeds;
}

InvariantBasis sextic_table_basis() {
    InvariantBasis b;
    b.degree = 6;
    const auto& seeds = sextic_table_seeds();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        b.elements.push_back(orbit_sum(seeds[i]));
        b.labels.push_back("T" + std::to_string(i + 1));
    }
    return b;
}

namespace {

// distinct orbit polynomials of K-hat-invariant monomials
std::set<Poly> enumerate_orbits(int d, bool full) {
    std::set<Poly> found;
    for_each_monomial(d, [&](const Monomial& m) {
        if (index_sum(m).is_zero()) found.insert(full ? orbit_sum_full(m) : orbit_sum(m));
    });
    return found;
}

InvariantBasis match_against(const std::set<Poly>& found, const std::vector<Poly>& reference,
                             const std::string& prefix, int first_label, int degree) {
    InvariantBasis b;
    b.degree = degree;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (!found.count(reference[i]))
            throw InternalCountMismatch(prefix + std::to_string(first_label + i) + " is not an enumerated orbit");
        b.elements.push_back(reference[i]);
        b.labels.push_back(prefix + std::to_string(first_label + static_cast<int>(i)));
    }
    std::set<Poly> distinct(reference.begin(), reference.end());
    if (distinct.size() != found.size())
        throw InternalCountMismatch("enumerated " + std::to_string(found.size()) + " orbits, table has " +
                                    std::to_string(distinct.size()));
    return b;
}

}  // namespace

InvariantBasis invariant_basis(int d) {
    if (d != 3 && d != 6) throw std::invalid_argument("basis only for degree 3 or 6");
    const long expected = invariant_dimension(d);
    auto found = enumerate_orbits(d, d == 3);
    if (static_cast<long>(found.size()) != expected)
        throw InternalCountMismatch("orbit count " + std::to_string(found.size()) + " != " +
                                    std::to_string(expected));
    if (d == 3) {
        std::vector<Poly> printed;
        for (int k = 0; k < 5; ++k) printed.push_back(printed_cubic(k));
        return match_against(found, printed, "F", 0, 3);
    }
    return match_against(found, sextic_table_basis().elements, "T", 1, 6);
}

Poly iota_act(const Poly& p) {
    return p.map_monomials([](const Monomial& m) {
        Monomial out;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exp(static_cast<Var>(v));
            if (!e) continue;
            Var w = is_theta(static_cast<Var>(v)) ? (-Index2::from_theta(static_cast<Var>(v))).theta_var()
                                                  : static_cast<Var>(v);
            out.mul_var(w, e);
        }
        return out;
    });
}

Poly combine(const InvariantBasis& basis, const std::vector<Eisenstein>& coords) {
    Poly r;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) r += basis.elements[i].scaled(coords[i]);
    return r;
}

IotaSplit iota_split(const InvariantBasis& basis) {
    const std::size_t n = basis.elements.size();
    Matrix<Eisenstein> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto c = coefficient_in_basis(iota_act(basis.elements[j]), basis.elements);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    IotaSplit out;
    for (int sign : {1, -1}) {
        Matrix<Eisenstein> a = m;
        for (std::size_t i = 0; i < n; ++i) a(i, i) -= Eisenstein(sign);
        auto rk = rank_and_kernel(a);
        auto& coords = sign == 1 ? out.plus_coords : out.minus_coords;
        auto& polys = sign == 1 ? out.plus_basis : out.minus_basis;
        for (auto& v : rk.kernel) {
            polys.push_back(combine(basis, v));
            coords.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace coble
