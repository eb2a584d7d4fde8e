#include "coble_cli/serialize.hpp"

namespace coble::cli {

json to_json(const Rational& q) { return coble::to_string(q); }

json to_json(const Eisenstein& z) { return {{"re", to_json(z.re())}, {"om", to_json(z.om())}}; }

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"coeff", to_json(c)}, {"exps", std::vector<int>(m.exps().begin(), m.exps().end())}});
    return terms;
}

json to_json(Index2 b) { return {b.i, b.j}; }

json to_json(const HeisenbergElement& g) { return {{"t", g.t}, {"x", to_json(g.x)}, {"xstar", to_json(g.xstar)}}; }

json to_json(const Apoint& a) { return {{"x", to_json(a.x)}, {"xstar", to_json(a.xstar)}}; }

json to_json(const IntMatrix2& m) { return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}; }

json to_json(const std::vector<Eisenstein>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
}

Eisenstein eisenstein_from_json(const json& j) {
    return Eisenstein(parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("om").get<std::string>()));
}

Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& t : j) {
        const auto exps = t.at("exps").get<std::vector<int>>();
        if (exps.size() != kNumVars) throw std::invalid_argument("exponent vector must have 24 entries");
        Monomial m;
        for (int v = 0; v < kNumVars; ++v)
            if (exps[v]) m.mul_var(static_cast<Var>(v), exps[v]);
        p.add_term(m, eisenstein_from_json(t.at("coeff")));
    }
    return p;
}

}  // namespace coble::cli
