#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coble/heisenberg.hpp"

namespace coble {

// (80 * C(d/3 + 2, 2) + C(d + 8, 8)) / 81
long invariant_dimension(int d);

// K-orbits of K-hat-invariant degree-d monomials, counted by enumeration
long count_invariant_orbits(int d);

struct InvariantBasis {
    int degree = 0;
    std::vector<Poly> elements;
    std::vector<std::string> labels;
};

// "00^2 01 11 12^2" -> Z00^2 Z01 Z11 Z12^2
Monomial parse_theta_monomial(std::string_view text);

// F0 = sum_b X_b^3, F_k = sum_b X_b X_{b+a} X_{b+2a} for a = 01, 10, 11, 12 (full 9-term sums)
Poly printed_cubic(int k);

// seed monomials of T1..T43, in table order
const std::vector<Monomial>& sextic_table_seeds();
// T_i = orbit sum of seed i
InvariantBasis sextic_table_basis();

// d = 3: full translation sums, labels F0..F4; d = 6: orbit sums matched to T1..T43
InvariantBasis invariant_basis(int d);

// Z_(i,j) -> Z_(-i,-j)
Poly iota_act(const Poly& p);

struct IotaSplit {
    std::vector<std::vector<Eisenstein>> plus_coords;   // in the coordinates of the input basis
    std::vector<std::vector<Eisenstein>> minus_coords;
    std::vector<Poly> plus_basis;
    std::vector<Poly> minus_basis;
};

IotaSplit iota_split(const InvariantBasis& basis);

// coordinate vector -> sum c_i * elements_i
Poly combine(const InvariantBasis& basis, const std::vector<Eisenstein>& coords);

}  // namespace coble
