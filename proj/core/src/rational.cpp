#include "coble/rational.hpp"

#include <stdexcept>

namespace coble {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto ok_int = [](const std::string& u) {
        std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: " + t);
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw DivisionByZero();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace coble
