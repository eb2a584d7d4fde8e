#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coble/invariants.hpp"

namespace coble {

enum class ChartMode { annexe, all_lifts };

ChartMode parse_chart_mode(const std::string& s);
std::string to_string(ChartMode m);

using PlaneVector = std::array<Eisenstein, 9>;

// A plane fixed by a lift of eta, parametrized by Z_b = sum_k basis[k][b] Y_k.
struct FixedPlaneChart {
    enum class Family { diagonal, shift };

    Apoint eta;          // class representative
    int lift_t = 0;      // the plane is fixed by (lift_t, eta.x, eta.xstar)
    Family family = Family::diagonal;
    Index2 direction;    // x for shifts, (r, s) for diagonal filters
    Index2 character;    // (u, v) for shifts
    std::array<PlaneVector, 3> basis;
    std::string label;
};

// z -> M^T z, the action on points of V; fixed planes are its eigenvalue-1 eigenspaces
Matrix<Eisenstein> point_action_matrix(const HeisenbergElement& g);

// annexe: 4 diagonal filters then the 36 shift tables; all_lifts: 40 classes x 3 lifts
std::vector<FixedPlaneChart> fixed_plane_charts(ChartMode mode);

// the diagonal filter zeroes Z_ij with r i + s j != 0
FixedPlaneChart diagonal_chart(Index2 rs);
// family x in {01, 10, 11, 12}; entries w^{u a + v b} Y_k from the phase tables
FixedPlaneChart shift_chart(Index2 family, Index2 uv);

// Y0..Y2 basis of plane sextics
const std::array<Poly, 4>& plane_sextic_basis();

Poly restrict_to_chart(const Poly& p, const FixedPlaneChart& chart);

using PlaneSexticCoords = std::array<Eisenstein, 4>;

// coordinates in S1..S4; NotInSpan when the restriction is not K_eta-invariant
PlaneSexticCoords restrict_sextic(const Poly& p, const FixedPlaneChart& chart);
// coefficients of Y0^2, Y0^3, Y0^4, Y0^6 after Y1 = Y2 = 1
PlaneSexticCoords restrict_sextic_y0_coefficients(const Poly& p, const FixedPlaneChart& chart);

// 3x3 matrix A with g.v_k = sum_l A(l,k) v_l for the chart basis; nullopt if g does not preserve the plane
std::optional<Matrix<Eisenstein>> induced_plane_action(const FixedPlaneChart& chart, const HeisenbergElement& g);

// points of A[3] orthogonal to eta
std::vector<Apoint> orthogonal_complement(const Apoint& eta);

enum class Coordinates { sextic_basis, y0_coefficients };

struct NuMatrix {
    Matrix<Eisenstein> entries;            // 4 rows per chart, one column per basis element
    std::vector<FixedPlaneChart> charts;
    std::vector<std::string> columns;
};

NuMatrix assemble_nu(ChartMode mode, Coordinates coords = Coordinates::sextic_basis);

std::string matrix_hash(const Matrix<Eisenstein>& m);

enum class KernelVerdict { four_differences, three_differences, neither };
std::string to_string(KernelVerdict v);

// w1 = T8 - T7, w2 = T11 - T10, w3 = T14 - T13, w4 = T17 - T16 as 43-vectors
std::vector<std::vector<Eisenstein>> candidate_kernel();

struct NuReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t transpose_rank = 0;
    std::vector<std::vector<Eisenstein>> kernel;
    bool rank_nullity = false;
    bool kernel_annihilates = false;
    bool kernel_iota_anti_invariant = false;
    KernelVerdict verdict = KernelVerdict::neither;
    std::size_t y0_coefficient_rank = 0;  // rank under the alternative coordinates
    std::string hash;
};

NuReport nu_rank_and_kernel(ChartMode mode);

// sequential diagonal filters followed by the shift subblock on the survivors
struct FilterReport {
    std::vector<std::size_t> surviving_counts;
    std::vector<std::size_t> survivors;        // 0-based columns after all four filters
    std::size_t diagonal_rank = 0;             // rank of the 16 x 43 diagonal block
    std::size_t shift_rank = 0;                // rank of the shift rows on the survivors
    std::vector<std::vector<Eisenstein>> shift_kernel;  // lifted to 43-vectors
};

FilterReport annexe_filter_pipeline();

struct LiftReport {
    std::vector<int> matching_lift;      // per annexe chart, the unique matching lift (or -1)
    std::vector<int> match_counts;       // number of matching lifts per chart
    std::array<std::size_t, 3> uniform_lift_rank{};
    std::size_t stacked_rank = 0;        // all 120 planes together
};

LiftReport lift_sensitivity();

}  // namespace coble
