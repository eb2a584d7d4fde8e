#include "coble/prime_field.hpp"

#include <algorithm>
#include <limits>

namespace coble {

Fp::Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("modulus 0");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
}

void Fp::same(const Fp& o) const {
    if (p_ != o.p_) throw MixedFieldError("F_p elements with different moduli");
}

Fp& Fp::operator+=(const Fp& o) {
    same(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    same(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
}

Fp Fp::pow(std::uint64_t e) const {
    Fp r(1, p_), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw DivisionByZero();
    return pow(p_ - 2);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), omega_(0) {
    if (p > static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max()) || !is_prime(p))
        throw PreconditionViolation("modulus must be a prime below 2^31");
    if (p % 3 != 1) throw PreconditionViolation("modulus must be 1 mod 3");
    // the two roots of w^2 + w + 1 are the nontrivial cube roots of 1; take the smaller
    for (std::int64_t x = 2;; ++x) {
        Fp r = Fp(x, p).pow((p - 1) / 3);
        if (r.value() != 1) {
            omega_ = std::min(r.value(), (r * r).value());
            break;
        }
    }
}

Fp PrimeField::from_rational(const Rational& q) const {
    Integer pm(p_);
    Integer n = q.get_num() % pm;
    Integer d = q.get_den() % pm;
    if (d == 0) throw DivisionByZero();
    return Fp(n.get_si(), p_) / Fp(d.get_si(), p_);
}

std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace coble
