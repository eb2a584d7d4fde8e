#include "coble/heisenberg.hpp"

#include <set>

namespace coble {

std::array<Index2, 9> all_indices() {
    std::array<Index2, 9> out;
    for (int k = 0; k < 9; ++k) out[k] = Index2(k / 3, k % 3);
    return out;
}

std::string to_string(Index2 b) { return std::to_string(b.i) + std::to_string(b.j); }

Apoint Apoint::class_rep() const {
    for (int c : {x.i, x.j, xstar.i, xstar.j}) {
        if (c == 1) return *this;
        if (c == 2) return -*this;
    }
    return *this;
}

int weil_form(const Apoint& a, const Apoint& b) { return mod3(dot(b.xstar, a.x) - dot(a.xstar, b.x)); }

std::vector<Apoint> nonzero_classes() {
    std::vector<Apoint> out;
    for (int k = 1; k < 81; ++k) {
        Apoint a{Index2(k / 27, k / 9), Index2(k / 3, k)};
        if (a.class_rep() == a) out.push_back(a);
    }
    return out;
}

HeisenbergElement make_element(int t, Index2 x, Index2 xstar) { return {mod3(t), x, xstar}; }

HeisenbergElement identity_element() { return {}; }

HeisenbergElement group_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
    return {mod3(g.t + h.t + dot(h.xstar, g.x)), g.x + h.x, g.xstar + h.xstar};
}

HeisenbergElement group_inverse(const HeisenbergElement& g) {
    // (t, x, x*)(s, -x, -x*) has exponent t + s + x*.x
    return {mod3(-g.t + dot(g.xstar, g.x)), -g.x, -g.xstar};
}

HeisenbergElement commutator(const HeisenbergElement& g, const HeisenbergElement& h) {
    return group_mul(group_mul(g, h), group_mul(group_inverse(g), group_inverse(h)));
}

std::array<HeisenbergElement, 4> generators() {
    return {HeisenbergElement{0, Index2(1, 0), Index2(0, 0)}, HeisenbergElement{0, Index2(0, 1), Index2(0, 0)},
            HeisenbergElement{0, Index2(0, 0), Index2(1, 0)}, HeisenbergElement{0, Index2(0, 0), Index2(0, 1)}};
}

std::pair<int, Index2> act_on_coordinate(const HeisenbergElement& g, Index2 b) {
    Index2 target = b - g.x;
    return {mod3(g.t + dot(g.xstar, target)), target};
}

Poly act_on_polynomial(const HeisenbergElement& g, const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial image;
        int phase = 0;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exp(static_cast<Var>(v));
            if (!e) continue;
            if (!is_theta(static_cast<Var>(v))) {
                image.mul_var(static_cast<Var>(v), e);
                continue;
            }
            auto [k, target] = act_on_coordinate(g, Index2::from_theta(static_cast<Var>(v)));
            phase += k * e;
            image.mul_var(target.theta_var(), e);
        }
        r.add_term(image, c * Eisenstein::omega_pow(phase));
    }
    return r;
}

Matrix<Eisenstein> action_matrix(const HeisenbergElement& g) {
    Matrix<Eisenstein> m(9, 9);
    for (Index2 b : all_indices()) {
        auto [k, target] = act_on_coordinate(g, b);
        m(target.theta_var(), b.theta_var()) = Eisenstein::omega_pow(k);
    }
    return m;
}

bool is_invariant(const Poly& p, const HeisenbergElement& g) { return act_on_polynomial(g, p) == p; }

bool is_invariant_under_generators(const Poly& p) {
    for (const auto& g : generators())
        if (!is_invariant(p, g)) return false;
    return true;
}

Index2 index_sum(const Monomial& m) {
    Index2 s;
    for (int v = 0; v < kNumTheta; ++v) s = s + m.exp(static_cast<Var>(v)) * Index2::from_theta(static_cast<Var>(v));
    return s;
}

namespace {

Monomial translate(const Monomial& m, Index2 x) {
    Monomial out;
    for (int v = 0; v < kNumVars; ++v) {
        int e = m.exp(static_cast<Var>(v));
        if (!e) continue;
        Var target = is_theta(static_cast<Var>(v)) ? (Index2::from_theta(static_cast<Var>(v)) - x).theta_var()
                                                   : static_cast<Var>(v);
        out.mul_var(target, e);
    }
    return out;
}

void require_khat_invariant(const Monomial& seed) {
    if (!index_sum(seed).is_zero())
        throw NotKhatInvariant("index sum " + to_string(index_sum(seed)) + " of " + to_string(seed));
}

}  // namespace

int translation_stabilizer(const Monomial& m) {
    int s = 0;
    for (Index2 x : all_indices())
        if (translate(m, x) == m) ++s;
    return s;
}

Poly orbit_sum(const Monomial& seed) {
    require_khat_invariant(seed);
    std::set<Monomial, GrlexDesc> seen;
    Poly r;
    for (Index2 x : all_indices()) {
        Monomial m = translate(seed, x);
        if (seen.insert(m).second) r.add_term(m, Eisenstein(1));
    }
    return r;
}

Poly orbit_sum_full(const Monomial& seed) {
    require_khat_invariant(seed);
    Poly r;
    for (Index2 x : all_indices()) r.add_term(translate(seed, x), Eisenstein(1));
    return r;
}

}  // namespace coble
