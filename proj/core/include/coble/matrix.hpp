#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "coble/errors.hpp"

namespace coble {

// dense row-major matrix over an exact field F
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const F& fill = F())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<F>& data() const { return a_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
        std::vector<F> out(rows_, v.empty() ? F() : zero_like(v[0]));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    // rows [r0, r0+n) and the given columns
    Matrix submatrix(std::size_t r0, std::size_t n, const std::vector<std::size_t>& cols) const {
        Matrix s(n, cols.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(r0 + i, cols[j]);
        return s;
    }

    void append_rows(const Matrix& o) {
        if (rows_ == 0 && cols_ == 0) cols_ = o.cols_;
        if (o.cols_ != cols_) throw std::invalid_argument("column count mismatch");
        a_.insert(a_.end(), o.a_.begin(), o.a_.end());
        rows_ += o.rows_;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("dimension mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < y.cols_; ++j) {
                F s = zero_like(x(i, 0));
                for (std::size_t k = 0; k < x.cols_; ++k) s += x(i, k) * y(k, j);
                z(i, j) = s;
            }
        return z;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

template <class F>
struct RowEchelon {
    Matrix<F> reduced;                 // reduced row echelon form, pivots equal 1
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

template <class F>
void check_one_field(const Matrix<F>& m) {
    const auto& d = m.data();
    for (std::size_t i = 1; i < d.size(); ++i) check_same_field(d[0], d[i]);
}

// Gauss-Jordan; in each column the pivot is the first usable row (deterministic)
template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
    check_one_field(m);
    RowEchelon<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const F inv = inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> kernel;  // one vector per free column, 1 at that column
};

template <class F>
RankKernel<F> rank_and_kernel(const Matrix<F>& m) {
    RankKernel<F> out;
    if (m.cols() == 0) return out;
    F zero{}, one{};
    if (!m.data().empty()) {
        zero = zero_like(m.data()[0]);
        one = one_like(m.data()[0]);
    } else if constexpr (std::is_constructible_v<F, int>) {
        one = F(1);
    } else {
        throw std::invalid_argument("cannot infer the field of an empty matrix");
    }
    auto ech = row_reduce(m);
    out.rank = ech.pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols(), zero);
        v[f] = one;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return row_reduce(m).pivots.size();
}

// unique x with A x = b; nullopt when inconsistent; throws when A has a kernel
template <class F>
std::optional<std::vector<F>> solve_unique(const Matrix<F>& a, const std::vector<F>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto ech = row_reduce(aug);
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
    if (ech.pivots.size() != a.cols()) throw SingularSystem("system has a nontrivial kernel");
    std::vector<F> x;
    x.reserve(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x.push_back(ech.reduced(i, a.cols()));
    return x;
}

}  // namespace coble
