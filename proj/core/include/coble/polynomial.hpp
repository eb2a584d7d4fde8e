#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coble/eisenstein.hpp"
#include "coble/errors.hpp"
#include "coble/matrix.hpp"
#include "coble/variables.hpp"

namespace coble {

class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<Var, int>> powers) {
        for (auto [v, e] : powers) mul_var(v, e);
    }
    static Monomial of(Var v, int e = 1) { return Monomial{{v, e}}; }

    int exp(Var v) const { return e_[v]; }
    int degree() const { return deg_; }
    const std::array<std::uint8_t, kNumVars>& exps() const { return e_; }

    // degree restricted to the theta coordinates
    int theta_degree() const {
        int d = 0;
        for (int v = 0; v < kNumTheta; ++v) d += e_[v];
        return d;
    }

    void mul_var(Var v, int e) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e_[v] + e > 255) throw std::overflow_error("exponent overflow");
        e_[v] = static_cast<std::uint8_t>(e_[v] + e);
        deg_ += e;
    }
    // divides by v once; caller checks exp(v) > 0
    Monomial without_one(Var v) const {
        Monomial m = *this;
        --m.e_[v];
        --m.deg_;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (int v = 0; v < kNumVars; ++v)
            if (b.e_[v]) m.mul_var(static_cast<Var>(v), b.e_[v]);
        return m;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::array<std::uint8_t, kNumVars> e_{};
    int deg_ = 0;
};

// graded lex, largest first: higher degree, then larger exponent on the earlier variable
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.exps() > b.exps();
    }
};

std::string to_string(const Monomial& m);

template <class C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C, GrlexDesc>;

    Polynomial() = default;
    Polynomial(const Monomial& m, const C& c) { add_term(m, c); }

    static Polynomial constant(const C& c) { return Polynomial(Monomial{}, c); }
    static Polynomial variable(Var v, const C& one) { return Polynomial(Monomial::of(v), one); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    const C* find(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? nullptr : &it->second;
    }
    C coeff(const Monomial& m, const C& zero) const {
        auto* c = find(m);
        return c ? *c : zero;
    }
    C coeff(const Monomial& m) const { return coeff(m, C()); }

    // -1 for the zero polynomial
    int degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }
    bool is_homogeneous() const {
        for (const auto& [m, c] : t_)
            if (m.degree() != degree()) return false;
        return true;
    }
    bool uses(Var v) const {
        for (const auto& [m, c] : t_)
            if (m.exp(v)) return true;
        return false;
    }

    void add_term(const Monomial& m, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (fresh) return;
        it->second += c;
        if (is_zero_coeff(it->second)) t_.erase(it);
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const C& s, const Polynomial& p) { return p.scaled(s); }
    friend Polynomial operator*(const Polynomial& p, const C& s) { return p.scaled(s); }

    Polynomial scaled(const C& s) const {
        Polynomial r;
        if (is_zero_coeff(s)) return r;
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, c * s);
        return r;
    }

    // p^0 = 1 requires a nonzero base so the field is known
    Polynomial pow(unsigned n) const {
        if (n == 0) {
            if (t_.empty()) throw std::invalid_argument("0^0");
            return constant(one_like(t_.begin()->second));
        }
        Polynomial r, b = *this;
        bool have = false;
        while (n) {
            if (n & 1) {
                r = have ? r * b : b;
                have = true;
            }
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    Polynomial derivative(Var v) const {
        Polynomial r;
        for (const auto& [m, c] : t_) {
            int e = m.exp(v);
            if (!e) continue;
            C k = c;
            k *= scalar_from_int(c, e);
            r.add_term(m.without_one(v), k);
        }
        return r;
    }

    // unassigned variables stay as they are
    template <class Assignment>
    Polynomial substitute(const Assignment& sigma) const {
        std::map<std::pair<Var, int>, Polynomial> cache;
        auto power = [&](Var v, int e) -> const Polynomial& {
            auto key = std::make_pair(v, e);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            return cache.emplace(key, sigma.at(v).pow(static_cast<unsigned>(e))).first->second;
        };
        Polynomial r;
        for (const auto& [m, c] : t_) {
            Monomial kept;
            std::vector<std::pair<Var, int>> replaced;
            for (int v = 0; v < kNumVars; ++v) {
                int e = m.exp(static_cast<Var>(v));
                if (!e) continue;
                if (sigma.count(static_cast<Var>(v)))
                    replaced.emplace_back(static_cast<Var>(v), e);
                else
                    kept.mul_var(static_cast<Var>(v), e);
            }
            Polynomial term(kept, c);
            for (auto [v, e] : replaced) {
                term = term * power(v, e);
                if (term.is_zero()) break;
            }
            r += term;
        }
        return r;
    }

    // values[v] for every variable that occurs
    template <class Values>
    C evaluate(const Values& values, const C& zero) const {
        C s = zero;
        for (const auto& [m, c] : t_) {
            C term = c;
            for (int v = 0; v < kNumVars; ++v)
                for (int k = 0; k < m.exp(static_cast<Var>(v)); ++k) term *= values[v];
            s += term;
        }
        return s;
    }

    template <class D, class Fn>
    Polynomial<D> map_coefficients(Fn f) const {
        Polynomial<D> r;
        for (const auto& [m, c] : t_) r.add_term(m, f(c));
        return r;
    }

    template <class Fn>
    Polynomial map_monomials(Fn f) const {
        Polynomial r;
        for (const auto& [m, c] : t_) r.add_term(f(m), c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // arbitrary but fixed order, for sets of polynomials
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        return std::lexicographical_compare(
            a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(), [](const auto& x, const auto& y) {
                if (x.first != y.first) return GrlexDesc{}(x.first, y.first);
                return x.second < y.second;
            });
    }

private:
    static bool is_zero_coeff(const C& c) { return coble::is_zero(c); }
    static C scalar_from_int(const C& like, int e) {
        C one = one_like(like), s = zero_like(like);
        for (int i = 0; i < e; ++i) s += one;
        return s;
    }

    Terms t_;
};

using Poly = Polynomial<Eisenstein>;

inline Poly var(Var v) { return Poly::variable(v, Eisenstein(1)); }
inline Poly X(int i, int j) { return var(theta(i, j)); }
inline Poly cst(const Eisenstein& c) { return Poly::constant(c); }

std::string to_string(const Poly& p);

// the coordinates of p in the span of basis; NotInSpan when p is outside it
template <class C>
std::vector<C> coefficient_in_basis(const Polynomial<C>& p, const std::vector<Polynomial<C>>& basis,
                                    const C& zero) {
    std::map<Monomial, std::size_t, GrlexDesc> rows;
    auto index = [&](const Polynomial<C>& q) {
        for (const auto& [m, c] : q.terms()) rows.emplace(m, 0);
    };
    for (const auto& b : basis) index(b);
    index(p);
    std::size_t r = 0;
    for (auto& [m, i] : rows) i = r++;
    Matrix<C> a(rows.size(), basis.size(), zero);
    std::vector<C> rhs(rows.size(), zero);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [m, c] : basis[j].terms()) a(rows[m], j) = c;
    for (const auto& [m, c] : p.terms()) rhs[rows[m]] = c;
    auto x = solve_unique(a, rhs);
    if (!x) throw NotInSpan("polynomial " + std::to_string(p.size()) + " terms: not in span");
    return *x;
}

inline std::vector<Eisenstein> coefficient_in_basis(const Poly& p, const std::vector<Poly>& basis) {
    return coefficient_in_basis(p, basis, Eisenstein());
}

// rank of the coefficient matrix of a family of polynomials
template <class C>
std::size_t polynomial_rank(const std::vector<Polynomial<C>>& family, const C& zero) {
    std::map<Monomial, std::size_t, GrlexDesc> cols;
    for (const auto& q : family)
        for (const auto& [m, c] : q.terms()) cols.emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, i] : cols) i = k++;
    Matrix<C> a(family.size(), cols.size(), zero);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (const auto& [m, c] : family[i].terms()) a(i, cols[m]) = c;
    return rank(a);
}

inline std::size_t polynomial_rank(const std::vector<Poly>& family) {
    return polynomial_rank(family, Eisenstein());
}

}  // namespace coble
