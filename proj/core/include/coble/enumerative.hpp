#pragma once

#include <array>
#include <utility>
#include <vector>

#include "coble/rational.hpp"

namespace coble {

// sum_r c_r H^r e^(8-r) on the blow-up of P^8 along the abelian surface
struct IntersectionClass {
    std::array<Integer, 9> c{};
};

// intersection numbers H^r e^(8-r), r = 0..8
struct IntersectionTable {
    std::array<Integer, 9> value{};
};

struct BlowupData {
    Integer h_squared = 18;      // h^2 on the surface
    Integer fibre_degree = -1;   // xi^5 on a P^5 fibre
    // xi^6 = a h xi^5 + b h^2 xi^4
    Integer relation_a = 9;
    Integer relation_b = -36;
};

// derived from the relation; H^8 = 1, terms with 3 <= r <= 7 vanish since h^3 = 0
IntersectionTable derive_intersection_table(const BlowupData& data = {});
// -18, -162, -810 at r = 2, 1, 0
IntersectionTable reference_intersection_table();

// (3H - 2e)(2H - e)^7
IntersectionClass dual_degree_class();
Integer evaluate(const IntersectionClass& cls, const IntersectionTable& table);
Integer dual_degree_computation();

// sum over a, b >= 1, a + b <= m - 1 of (sin(pi a/m) sin(pi b/m) sin(pi (a+b)/m))^-2
double verlinde_v111(int m);

struct VerlindeValue {
    double value = 0;
    long nearest = 0;
};

// 3 ((k+3)/8)^2 V111(k+3); NonIntegralDimension beyond 1e-6 relative error
VerlindeValue verlinde_dimension(int k);

// n-th forward differences of dim(1..n+1)
Integer verlinde_finite_difference(int order);
// 8th difference = 8! * leading coefficient = c1(L)^8
Integer theta_degree_from_verlinde();

// (-1)^h 2^{6h} sum_r C(4h-2r-1, 2h-1) B_2r/(2r)! B_{6h-2r}/(6h-2r)!
Rational zagier_leading_coefficient(int h);

// C(10,2) - 6^2
Integer quadric_dimension_count();

// -6 = -9 + delta; deg B = 2 delta
std::pair<int, int> ramification_degree();

}  // namespace coble
