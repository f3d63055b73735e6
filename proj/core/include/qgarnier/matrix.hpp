#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qgarnier/scalar.hpp"

namespace qgarnier {

// Small dense square matrix, row major. Public indices are 1-based to match
// the E_{j1,j2} basis ("1 in the (j1, j2) entry").
template <class F>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim), F(0)) {}

    static Matrix identity(int dim) {
        Matrix r(dim);
        for (int k = 1; k <= dim; ++k) r(k, k) = F(1);
        return r;
    }

    int dim() const { return dim_; }

    F& operator()(int r, int c) { return data_[idx(r, c)]; }
    const F& operator()(int r, int c) const { return data_[idx(r, c)]; }

    Matrix& operator*=(const F& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }
    friend Matrix operator*(Matrix m, const F& s) { return m *= s; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.dim_);
        for (int i = 1; i <= x.dim_; ++i)
            for (int k = 1; k <= x.dim_; ++k) {
                const F& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (int j = 1; j <= x.dim_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= y.data_[k];
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> r(static_cast<std::size_t>(dim_), F(0));
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) r[static_cast<std::size_t>(i - 1)] += (*this)(i, j) * v[static_cast<std::size_t>(j - 1)];
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.dim_ == y.dim_ && x.data_ == y.data_; }

    template <class G, class Fn>
    Matrix<G> map(Fn&& fn) const {
        Matrix<G> r(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>((r - 1) * dim_ + (c - 1)); }

    int dim_ = 0;
    std::vector<F> data_;
};

// Gauss-Jordan inverse over a field; exact pivots (first nonzero) for ExactQ,
// partial pivoting for BigReal.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    const int d = m.dim();
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(d);
    for (int col = 1; col <= d; ++col) {
        int piv = 0;
        if constexpr (std::is_same_v<F, BigReal>) {
            BigReal best = 0;
            for (int r = col; r <= d; ++r)
                if (abs(a(r, col)) > best) { best = abs(a(r, col)); piv = r; }
        } else {
            for (int r = col; r <= d && piv == 0; ++r)
                if (!is_zero(a(r, col))) piv = r;
        }
        if (piv == 0) throw DivisionByZero("singular matrix");
        if (piv != col)
            for (int c = 1; c <= d; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const F p = a(col, col);
        for (int c = 1; c <= d; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (int r = 1; r <= d; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            const F f = a(r, col);
            for (int c = 1; c <= d; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

template <class F>
F determinant(Matrix<F> a) {
    const int d = a.dim();
    F det(1);
    for (int col = 1; col <= d; ++col) {
        int piv = 0;
        for (int r = col; r <= d && piv == 0; ++r)
            if (!is_zero(a(r, col))) piv = r;
        if (piv == 0) return F(0);
        if (piv != col) {
            for (int c = 1; c <= d; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r <= d; ++r) {
            const F f = a(r, col) / a(col, col);
            for (int c = col; c <= d; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

inline BigReal norm_inf(const std::vector<BigReal>& v) {
    BigReal r = 0;
    for (const auto& x : v) r = std::max(r, BigReal(abs(x)));
    return r;
}

inline BigReal norm_inf(const Matrix<BigReal>& m) {
    BigReal r = 0;
    for (int i = 1; i <= m.dim(); ++i) {
        BigReal row = 0;
        for (int j = 1; j <= m.dim(); ++j) row += abs(m(i, j));
        r = std::max(r, row);
    }
    return r;
}

inline Matrix<BigReal> to_big(const Matrix<ExactQ>& m) {
    return m.template map<BigReal>([](const ExactQ& v) { return to_big(v); });
}

template <class F>
std::string to_string(const Matrix<F>& m) {
    std::string s = "[";
    for (int i = 1; i <= m.dim(); ++i) {
        s += (i > 1 ? ", [" : "[");
        for (int j = 1; j <= m.dim(); ++j) s += (j > 1 ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

}  // namespace qgarnier
