#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coble/heisenberg.hpp"

namespace coble {

// b0 F0 + ... + b4 F4
Poly coble_cubic();

// Q_b indexed by theta_var(b), entered as printed (not generated)
const std::array<Poly, 9>& barth_quadrics();

struct IdentityReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::optional<Poly> first_residual;

    void require(bool ok, const std::string& what, const Poly& residual) {
        if (ok) return;
        pass = false;
        failures.push_back(what);
        if (!first_residual) first_residual = residual;
    }
};

// dF/dX_b = 3 Q_b for all b, sum_b X_b Q_b = F, and the Euler identity
IdentityReport verify_derivative_identity();

// F restricted to X_1j = X_2j = 0
Poly restrict_to_eta_plane();
// b0 (X0^3 + X1^3 + X2^3) + 3 b1 X0 X1 X2 with X_j = Z_0j
Poly expected_eta_restriction();

// X00 = Y0; X01 = Y1 + Z1, X02 = Y1 - Z1; X10/X20 with Y2, Z2; X11/X22 with Y3, Z3; X12/X21 with Y4, Z4
std::map<Var, Poly> yz_chart();

// (q_ij(Z)) as printed; row i dotted with b gives q_i
const std::array<std::array<Poly, 5>, 5>& steiner_quadrics();
Poly steiner_row_form(int i);

// Barth's quadrics Q1..Q9 in the Y/Z coordinates, as printed
const std::array<Poly, 9>& barth_yz_quadrics();

struct MinusSpaceReport {
    std::array<Poly, 9> restricted;   // Q_b with Y = 0
    bool first_row_matches = false;   // Q_00|_{Y=0} = q_1
    std::size_t restricted_rank = 0;
    std::size_t printed_rank = 0;
    std::size_t joint_rank = 0;
    bool span_equal = false;
    std::vector<std::string> outside;  // restricted quadrics outside the printed span
};

MinusSpaceReport minus_space_restriction();

struct YZBlockReport {
    std::size_t printed_rank = 0;
    std::vector<int> outside;  // 1-based indices of printed Q_i not in the span
    bool pass = false;
};

YZBlockReport check_barth_yz_forms();

struct SteinerResult {
    Matrix<Eisenstein> matrix;
    std::size_t rank = 0;
    std::optional<std::vector<Eisenstein>> point;  // kernel generator when rank = 4
};

SteinerResult steiner_matrix(const std::array<Eisenstein, 4>& z);

// g.Q_b = w^{2t + 2x*.(b - x)} Q_{b-x} for every generator and every b
IdentityReport verify_quadric_covariance();

// rank of the nine quadrics as a linear system over Q(w)(b), certified at two specializations of b
std::size_t barth_quadric_rank();

}  // namespace coble
