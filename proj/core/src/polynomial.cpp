#include "coble/polynomial.hpp"

namespace coble {

std::string to_string(const Monomial& m) {
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        int e = m.exp(static_cast<Var>(v));
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(v));
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        std::string cs = to_string(c);
        bool compound = !c.is_rational() && sgn(c.re()) != 0;
        if (compound) cs = "(" + cs + ")";
        std::string term;
        if (m.degree() == 0)
            term = cs;
        else if (c == Eisenstein(1))
            term = to_string(m);
        else if (c == Eisenstein(-1))
            term = "-" + to_string(m);
        else
            term = cs + "*" + to_string(m);
        if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else s = term;
    }
    return s;
}

}  // namespace coble
