#pragma once

#include <array>
#include <string>
#include <vector>

#include "coble/matrix.hpp"
#include "coble/polynomial.hpp"

namespace coble {

// element of (Z/3)^2, entries kept in {0,1,2}
struct Index2 {
    int i = 0;
    int j = 0;

    Index2() = default;
    constexpr Index2(int a, int b) : i(mod3(a)), j(mod3(b)) {}

    static Index2 from_theta(Var v) { return {v / 3, v % 3}; }
    Var theta_var() const { return theta(i, j); }

    friend Index2 operator+(Index2 a, Index2 b) { return {a.i + b.i, a.j + b.j}; }
    friend Index2 operator-(Index2 a, Index2 b) { return {a.i - b.i, a.j - b.j}; }
    Index2 operator-() const { return {-i, -j}; }
    friend Index2 operator*(int k, Index2 a) { return {k * a.i, k * a.j}; }
    friend int dot(Index2 a, Index2 b) { return mod3(a.i * b.i + a.j * b.j); }
    bool is_zero() const { return i == 0 && j == 0; }
    friend bool operator==(Index2 a, Index2 b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(Index2 a, Index2 b) { return !(a == b); }
    friend bool operator<(Index2 a, Index2 b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

std::array<Index2, 9> all_indices();
std::string to_string(Index2 b);

// point of A[3] = (Z/3)^2 x (Z/3)^2
struct Apoint {
    Index2 x;
    Index2 xstar;

    Apoint operator-() const { return {-x, -xstar}; }
    friend Apoint operator+(Apoint a, Apoint b) { return {a.x + b.x, a.xstar + b.xstar}; }
    bool is_zero() const { return x.is_zero() && xstar.is_zero(); }
    // the member of {a, -a} whose first nonzero coordinate is 1
    Apoint class_rep() const;
    friend bool operator==(Apoint a, Apoint b) { return a.x == b.x && a.xstar == b.xstar; }
    friend bool operator<(Apoint a, Apoint b) {
        return a.x != b.x ? a.x < b.x : a.xstar < b.xstar;
    }
};

// y*.x - x*.y mod 3
int weil_form(const Apoint& a, const Apoint& b);

// the 40 classes of nonzero points mod +-, as class representatives
std::vector<Apoint> nonzero_classes();

// acts on theta coordinates by X_b -> w^{t + x*.(b - x)} X_{b - x}
struct HeisenbergElement {
    int t = 0;
    Index2 x;
    Index2 xstar;

    Apoint point() const { return {x, xstar}; }
    bool is_central() const { return x.is_zero() && xstar.is_zero(); }
    friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) {
        return a.t == b.t && a.x == b.x && a.xstar == b.xstar;
    }
};

HeisenbergElement make_element(int t, Index2 x, Index2 xstar);
HeisenbergElement identity_element();

// composite acting as g after h: t = t_g + t_h + x*_h.x_g
HeisenbergElement group_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement group_inverse(const HeisenbergElement& g);
HeisenbergElement commutator(const HeisenbergElement& g, const HeisenbergElement& h);

// (1,e1,0), (1,e2,0), (1,0,e1*), (1,0,e2*)
std::array<HeisenbergElement, 4> generators();

// image of a single coordinate: (scalar exponent, target index)
std::pair<int, Index2> act_on_coordinate(const HeisenbergElement& g, Index2 b);

Poly act_on_polynomial(const HeisenbergElement& g, const Poly& p);

// 9x9 matrix in the basis X_00..X_22; column b holds the image of X_b
Matrix<Eisenstein> action_matrix(const HeisenbergElement& g);

bool is_invariant(const Poly& p, const HeisenbergElement& g);
bool is_invariant_under_generators(const Poly& p);

// sum over translations, each distinct monomial once
Poly orbit_sum(const Monomial& seed);
// sum over all 9 translations, with repetition
Poly orbit_sum_full(const Monomial& seed);

// sum of theta indices, counted with multiplicity
Index2 index_sum(const Monomial& m);
// number of translations fixing m
int translation_stabilizer(const Monomial& m);

}  // namespace coble
