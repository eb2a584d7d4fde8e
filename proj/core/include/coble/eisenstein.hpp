#pragma once

#include <iosfwd>
#include <string>

#include "coble/rational.hpp"

namespace coble {

// a + b*w with w^2 + w + 1 = 0
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(long a) : re_(a) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational a) : re_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational a, Rational b) : re_(std::move(a)), om_(std::move(b)) {}

    static Eisenstein omega() { return {Rational(0), Rational(1)}; }
    // w^k for k mod 3
    static Eisenstein omega_pow(int k);

    const Rational& re() const { return re_; }
    const Rational& om() const { return om_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(om_) == 0; }
    bool is_rational() const { return sgn(om_) == 0; }

    // a^2 - ab + b^2
    Rational norm() const;
    // a + b*w^2
    Eisenstein conj() const;
    Eisenstein inverse() const;

    Eisenstein& operator+=(const Eisenstein& o);
    Eisenstein& operator-=(const Eisenstein& o);
    Eisenstein& operator*=(const Eisenstein& o);
    Eisenstein& operator/=(const Eisenstein& o);

    friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
    friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
    friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
    friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }
    Eisenstein operator-() const { return {-re_, -om_}; }

    friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
        return a.re_ == b.re_ && a.om_ == b.om_;
    }
    friend bool operator!=(const Eisenstein& a, const Eisenstein& b) { return !(a == b); }
    // total order (re first) so values can key maps; not a field order
    friend bool operator<(const Eisenstein& a, const Eisenstein& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.om_ < b.om_;
    }

private:
    Rational re_{0};
    Rational om_{0};
};

std::string to_string(const Eisenstein& z);
std::ostream& operator<<(std::ostream& os, const Eisenstein& z);

inline Eisenstein eisenstein_mul(const Eisenstein& a, const Eisenstein& b) { return a * b; }
inline Eisenstein eisenstein_inverse(const Eisenstein& a) { return a.inverse(); }

inline bool is_zero(const Eisenstein& z) { return z.is_zero(); }
inline Eisenstein zero_like(const Eisenstein&) { return {}; }
inline Eisenstein one_like(const Eisenstein&) { return Eisenstein(1); }
inline void check_same_field(const Eisenstein&, const Eisenstein&) {}
inline Eisenstein inverse(const Eisenstein& z) { return z.inverse(); }

}  // namespace coble
