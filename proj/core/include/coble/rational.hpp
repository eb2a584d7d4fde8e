#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "coble/errors.hpp"

namespace coble {

// arithmetic keeps num/den reduced with den > 0; the two-argument constructor does not, use ratio()
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", with "/q" dropped when q = 1
std::string to_string(const Rational& q);

// accepts "p", "p/q", leading sign; throws std::invalid_argument
Rational parse_rational(std::string_view s);

Integer binomial(long n, long k);

inline Rational ratio(long p, long q) {
    if (q == 0) throw DivisionByZero();
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline void check_same_field(const Rational&, const Rational&) {}

inline Rational inverse(const Rational& q) {
    if (is_zero(q)) throw DivisionByZero();
    return Rational(1) / q;
}

}  // namespace coble
