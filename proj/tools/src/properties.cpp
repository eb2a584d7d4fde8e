#include "coble_cli/properties.hpp"

#include <functional>
#include <random>

#include "coble/bernoulli.hpp"
#include "coble/heisenberg.hpp"
#include "coble/prime_field.hpp"

namespace coble::cli {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng) {
    return ratio(uniform(rng, -50, 50), uniform(rng, 1, 30));
}

Eisenstein random_eisenstein(Rng& rng) { return {random_rational(rng), random_rational(rng)}; }

Fp random_fp(Rng& rng, std::uint32_t p) { return Fp(uniform(rng, 0, p - 1), p); }

HeisenbergElement random_element(Rng& rng) {
    return make_element(static_cast<int>(uniform(rng, 0, 2)), {int(uniform(rng, 0, 2)), int(uniform(rng, 0, 2))},
                        {int(uniform(rng, 0, 2)), int(uniform(rng, 0, 2))});
}

// homogeneous of the given degree in the first nvars variables
Poly random_homogeneous(Rng& rng, int nvars, int degree, int terms) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int k = 0; k < degree; ++k) m.mul_var(static_cast<Var>(uniform(rng, 0, nvars - 1)), 1);
        p.add_term(m, Eisenstein(uniform(rng, -5, 5), uniform(rng, -5, 5)));
    }
    return p;
}

template <class F>
bool field_axioms(const F& a, const F& b, const F& c, const F& zero, const F& one) {
    bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a + (-a) == zero;
    if (!is_zero(a)) ok = ok && a * inverse(a) == one;
    return ok;
}

struct Suite {
    PropertyResult result;
    void run(int cases, const std::function<bool(int)>& body) {
        for (int i = 0; i < cases; ++i) {
            ++result.cases;
            if (!body(i)) {
                if (!result.failures) result.first_failure = "case " + std::to_string(i);
                ++result.failures;
            }
        }
    }
};

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int cases) {
    Rng rng(seed);
    std::vector<PropertyResult> out;
    auto suite = [&](const std::string& name, const std::function<bool(int)>& body) {
        Suite s;
        s.result.name = name;
        s.run(cases, body);
        out.push_back(s.result);
    };

    suite("field axioms over Q", [&](int) {
        return field_axioms(random_rational(rng), random_rational(rng), random_rational(rng), Rational(0), Rational(1));
    });
    suite("field axioms over Q(w)", [&](int) {
        return field_axioms(random_eisenstein(rng), random_eisenstein(rng), random_eisenstein(rng), Eisenstein(0),
                            Eisenstein(1));
    });
    suite("field axioms over F_p", [&](int i) {
        const std::uint32_t p = (i % 3 == 0) ? 13 : (i % 3 == 1) ? 31 : 997;
        return field_axioms(random_fp(rng, p), random_fp(rng, p), random_fp(rng, p), Fp(0, p), Fp(1, p));
    });
    suite("w^2 + w + 1 = 0 in F_p", [&](int i) {
        const std::uint32_t ps[] = {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 997};
        const Fp w = PrimeField(ps[i % 12]).omega();
        return w * w + w + Fp(1, ps[i % 12]) == Fp(0, ps[i % 12]);
    });
    suite("Leibniz rule", [&](int) {
        const Poly f = random_homogeneous(rng, 9, int(uniform(rng, 1, 3)), int(uniform(rng, 1, 6)));
        const Poly g = random_homogeneous(rng, 9, int(uniform(rng, 1, 3)), int(uniform(rng, 1, 6)));
        const Var v = static_cast<Var>(uniform(rng, 0, 8));
        return (f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v);
    });
    suite("Euler identity", [&](int) {
        const int d = int(uniform(rng, 1, 4));
        const Poly f = random_homogeneous(rng, 9, d, int(uniform(rng, 1, 8)));
        Poly lhs;
        for (int v = 0; v < 9; ++v) lhs += var(static_cast<Var>(v)) * f.derivative(static_cast<Var>(v));
        return lhs == f.scaled(Eisenstein(d));
    });
    suite("action composition", [&](int) {
        const auto g = random_element(rng), h = random_element(rng);
        const Poly f = random_homogeneous(rng, 9, 3, 4);
        return action_matrix(group_mul(g, h)) == action_matrix(g) * action_matrix(h) &&
               act_on_polynomial(group_mul(g, h), f) == act_on_polynomial(g, act_on_polynomial(h, f));
    });
    suite("eigenvalue multiplicity 3", [&](int) {
        HeisenbergElement g = random_element(rng);
        while (g.is_central()) g = random_element(rng);
        const auto m = action_matrix(g);
        for (int k = 0; k < 3; ++k) {
            auto shifted = m;
            for (std::size_t i = 0; i < 9; ++i) shifted(i, i) -= Eisenstein::omega_pow(k);
            if (rank_and_kernel(shifted).kernel.size() != 3) return false;
        }
        return true;
    });
    suite("rank-nullity over Q", [&](int) {
        const auto r = std::size_t(uniform(rng, 1, 8)), c = std::size_t(uniform(rng, 1, 8));
        Matrix<Rational> m(r, c, Rational(0));
        const long spread = uniform(rng, 0, 3);  // small spread gives rank drops
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(uniform(rng, -spread, spread));
        const auto rk = rank_and_kernel(m);
        if (rk.rank + rk.kernel.size() != c) return false;
        for (const auto& v : rk.kernel)
            for (const auto& e : m.apply(v))
                if (e != 0) return false;
        return rk.rank == rank(m.transpose());
    });
    suite("rank-nullity over F_p", [&](int) {
        const auto r = std::size_t(uniform(rng, 1, 8)), c = std::size_t(uniform(rng, 1, 8));
        Matrix<Fp> m(r, c, Fp(0, 13));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = Fp(uniform(rng, 0, 3), 13);
        const auto rk = rank_and_kernel(m);
        if (rk.rank + rk.kernel.size() != c) return false;
        for (const auto& v : rk.kernel)
            for (const auto& e : m.apply(v))
                if (!e.is_zero()) return false;
        return true;
    });
    suite("Bernoulli recurrence", [&](int) {
        const int n = int(uniform(rng, 1, 60));
        Rational s = 0;
        for (int k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
        return s == 0;
    });
    return out;
}

}  // namespace coble::cli
