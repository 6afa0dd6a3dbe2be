#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "fields.hpp"

namespace novikov {

/// Dense row-major matrix over an arbitrary element type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw PreconditionViolation("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    template <IntegralDomain D>
    static Matrix identity(std::size_t n, const D& dom) {
        Matrix m(n, n, dom.zero());
        for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    template <class Fn>
    auto map(Fn&& fn) const -> Matrix<std::decay_t<decltype(fn(std::declval<const T&>()))>> {
        Matrix<std::decay_t<decltype(fn(std::declval<const T&>()))>> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<IntPolynomial>;

template <IntegralDomain D>
Matrix<typename D::Element> multiply(const Matrix<typename D::Element>& a, const Matrix<typename D::Element>& b,
                                     const D& dom) {
    if (a.cols() != b.rows()) throw PreconditionViolation("matrix shapes do not compose");
    Matrix<typename D::Element> out(a.rows(), b.cols(), dom.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (dom.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = dom.add(out(i, j), dom.mul(a(i, k), b(k, j)));
        }
    return out;
}

template <IntegralDomain D>
bool is_zero_matrix(const Matrix<typename D::Element>& m, const D& dom) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!dom.is_zero(m(i, j))) return false;
    return true;
}

/// Applies the ring homomorphism Z[t] -> dom entrywise.
template <IntegralDomain D>
Matrix<typename D::Element> specialize_matrix(const PolyMatrix& m, const D& dom) {
    return m.map([&](const IntPolynomial& p) { return dom.from_polynomial(p); });
}

namespace detail {

/// Fraction-free (Bareiss) forward elimination in place. Pivot for each
/// column is the first row at or below the current rank with a nonzero
/// entry. Returns the rank; `sign` tracks row swaps.
template <IntegralDomain D>
std::size_t bareiss_eliminate(Matrix<typename D::Element>& a, const D& dom, int& sign) {
    using E = typename D::Element;
    sign = 1;
    std::size_t r = 0;
    E prev = dom.one();
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && dom.is_zero(a(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                E v = dom.sub(dom.mul(a(r, c), a(i, j)), dom.mul(a(i, c), a(r, j)));
                a(i, j) = dom.divide_exact(v, prev);
            }
            a(i, c) = dom.zero();
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

} // namespace detail

/// Exact rank over the fraction field of `dom`.
template <IntegralDomain D>
std::size_t rank(Matrix<typename D::Element> m, const D& dom) {
    int sign = 1;
    return detail::bareiss_eliminate(m, dom, sign);
}

template <IntegralDomain D>
typename D::Element determinant(Matrix<typename D::Element> m, const D& dom) {
    if (m.rows() != m.cols()) throw PreconditionViolation("determinant of a non-square matrix");
    if (m.rows() == 0) return dom.one();
    int sign = 1;
    if (detail::bareiss_eliminate(m, dom, sign) < m.rows()) return dom.zero();
    typename D::Element d = m(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? dom.neg(d) : d;
}

/// Rank of a Z[t]-matrix after specialisation to a field target.
inline std::size_t rank_at(const PolyMatrix& m, const FieldTarget& t) {
    return with_field(t, [&](const auto& field) { return rank(specialize_matrix(m, field), field); });
}

/// Generic rank, i.e. over Q(t), computed fraction-free inside Z[t].
inline std::size_t generic_rank(const PolyMatrix& m) { return rank(m, PolynomialRing{}); }

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

/// gcd in Z[t] of all size x size minors, lc > 0; zero if every minor
/// vanishes. The empty minor (size 0) is 1.
inline IntPolynomial minor_gcd(const PolyMatrix& m, std::size_t size) {
    if (size > m.rows() || size > m.cols()) throw PreconditionViolation("minor size exceeds matrix shape");
    if (size == 0) return IntPolynomial(1L);
    PolynomialRing ring;
    IntPolynomial g;
    detail::for_each_subset(m.rows(), size, [&](const std::vector<std::size_t>& rows) {
        if (g.degree() == 0 && abs_value(g.leading()) == 1) return;
        detail::for_each_subset(m.cols(), size, [&](const std::vector<std::size_t>& cols) {
            if (g.degree() == 0 && abs_value(g.leading()) == 1) return;
            PolyMatrix sub(size, size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) sub(i, j) = m(rows[i], cols[j]);
            IntPolynomial d = determinant(std::move(sub), ring);
            if (!d.is_zero()) g = gcd(g, d);
        });
    });
    return g;
}

} // namespace novikov
