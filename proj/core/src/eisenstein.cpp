#include "coble/eisenstein.hpp"

#include <ostream>

namespace coble {

Eisenstein Eisenstein::omega_pow(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return Eisenstein(1);
        case 1: return omega();
        default: return {Rational(-1), Rational(-1)};
    }
}

Rational Eisenstein::norm() const { return re_ * re_ - re_ * om_ + om_ * om_; }

Eisenstein Eisenstein::conj() const { return {re_ - om_, -om_}; }

Eisenstein Eisenstein::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    Eisenstein c = conj();
    return {c.re_ / n, c.om_ / n};
}

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
    re_ += o.re_;
    om_ += o.om_;
    return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
    re_ -= o.re_;
    om_ -= o.om_;
    return *this;
}

// (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    if (sgn(om_) == 0 && sgn(o.om_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational bd = om_ * o.om_;
    Rational r = re_ * o.re_ - bd;
    Rational w = re_ * o.om_ + om_ * o.re_ - bd;
    re_ = std::move(r);
    om_ = std::move(w);
    return *this;
}

Eisenstein& Eisenstein::operator/=(const Eisenstein& o) { return *this *= o.inverse(); }

std::string to_string(const Eisenstein& z) {
    if (sgn(z.om()) == 0) return to_string(z.re());
    std::string w = z.om() == 1 ? "w" : z.om() == -1 ? "-w" : to_string(z.om()) + "*w";
    if (sgn(z.re()) == 0) return w;
    if (w[0] != '-') w = "+" + w;
    return to_string(z.re()) + w;
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& z) { return os << to_string(z); }

}  // namespace coble
