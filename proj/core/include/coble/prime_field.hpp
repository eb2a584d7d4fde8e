#pragma once

#include <cstdint>
#include <string>

#include "coble/errors.hpp"
#include "coble/rational.hpp"

namespace coble {

// element of F_p; carries its modulus so mixing fields is caught at runtime
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return {v_ == 0 ? 0 : static_cast<std::int64_t>(p_) - v_, p_}; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

private:
    void same(const Fp& o) const;
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// F_p for p prime, p = 1 mod 3, p < 2^31
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    // smallest residue > 1 with w^2 + w + 1 = 0
    Fp omega() const { return Fp(omega_, p_); }
    Fp operator()(std::int64_t v) const { return Fp(v, p_); }
    // throws DivisionByZero when p divides the denominator
    Fp from_rational(const Rational& q) const;

private:
    std::uint32_t p_;
    std::uint32_t omega_;
};

std::string to_string(const Fp& a);

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline void check_same_field(const Fp& a, const Fp& b) {
    if (a.modulus() != b.modulus()) throw MixedFieldError("F_p elements with different moduli");
}
inline Fp inverse(const Fp& a) { return a.inverse(); }

}  // namespace coble
