#pragma once

#include <array>
#include <string>
#include <vector>

#include "coble/rational.hpp"

namespace coble {

struct IntMatrix2 {
    std::array<long, 4> a{};  // row-major

    static IntMatrix2 identity() { return {{1, 0, 0, 1}}; }
    long operator()(int i, int j) const { return a[2 * i + j]; }
    long det() const { return a[0] * a[3] - a[1] * a[2]; }
    IntMatrix2 transpose() const { return {{a[0], a[2], a[1], a[3]}}; }
    IntMatrix2 mod(long n) const;

    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
        return {{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
                 x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
    }
    friend IntMatrix2 operator+(const IntMatrix2& x, const IntMatrix2& y) {
        return {{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]}};
    }
    IntMatrix2 operator-() const { return {{-a[0], -a[1], -a[2], -a[3]}}; }
    friend bool operator==(const IntMatrix2& x, const IntMatrix2& y) { return x.a == y.a; }
    friend bool operator<(const IntMatrix2& x, const IntMatrix2& y) { return x.a < y.a; }
};

std::string to_string(const IntMatrix2& m);

// automorphisms of E x E
IntMatrix2 rotation_t();        // [[0,-1],[1,-1]]
IntMatrix2 reflection_j_tilde();  // [[1,-1],[0,-1]]
IntMatrix2 reflection_j();        // -J~ T^2

struct NamedCheck {
    std::string name;
    bool pass = false;
};

// T^3 = I, J^2 = I, J~^2 = I, TJ = JT^2, T^2 + T + I = 0, J = [[0,-1],[-1,0]], |<T, J>| = 6
std::vector<NamedCheck> dihedral_identities();

// all products of T and J
std::vector<IntMatrix2> generated_group();

struct CoverParams {
    long n = 3;       // cover degree
    long g = 2;       // base genus
    long t_size = 0;  // |T|, used only for even n
};

// (n-1)(g-1)/2 for odd n; (n/2)(g-1) + 1 - |T|/2 for even n
Rational genus_of_quotient(const CoverParams& params);

struct DimensionMatch {
    long prym_dimension = 0;   // (n-1)(g-1)
    long twice_genus = 0;      // 2 g_nu
    bool pass = false;
};

DimensionMatch prym_dimension_match(long n, long g);

// [[2, b],[b, 2]]
IntMatrix2 polarization_matrix(long b);
// unique b with phi T^-1 = T^t phi
long polarization_beta_solve();

// v in (Z/3)^2 with phi v = 0 mod 3
std::vector<std::array<long, 2>> polarization_kernel_mod3(const IntMatrix2& phi);

}  // namespace coble
