#pragma once

#include "s2cobar/core/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace s2cobar {

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        r(i, j) += x * b(k, j);
            }
        return r;
    }

    Matrix reduced(const Ring& ring) const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = ring.reduce(x);
        return r;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[target] += factor * row[source]
    void add_row(std::size_t target, std::size_t source, const Scalar& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(source, j) != 0)
                (*this)(target, j) += factor * (*this)(source, j);
    }
    void add_col(std::size_t target, std::size_t source, const Scalar& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, source) != 0)
                (*this)(i, target) += factor * (*this)(i, source);
    }
    void scale_row(std::size_t r, const Scalar& f)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) *= f;
    }
    void scale_col(std::size_t c, const Scalar& f)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, c) *= f;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Exact determinant by fraction-free elimination over Q.
inline Scalar determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r)
            if (m(r, c) != 0)
                m.add_row(r, c, -m(r, c) / m(c, c));
    }
    return det;
}

struct SmithForm {
    Matrix left;          // U, unimodular
    Matrix diagonal;      // D = U * M * V
    Matrix right;         // V, unimodular
    Matrix left_inverse;  // U^{-1}
    Matrix right_inverse; // V^{-1}
    std::size_t rank = 0;

    std::vector<Integer> invariant_factors() const
    {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < rank; ++i)
            out.push_back(numerator(diagonal(i, i)));
        return out;
    }
};

namespace detail {

inline Integer as_integer(const Scalar& x)
{
    if (denominator(x) != 1)
        throw RingError("Smith normal form needs integer entries");
    return numerator(x);
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

}  // namespace detail

/// Smith normal form over Z: U*M*V = D, D diagonal with d_i | d_{i+1}, d_i >= 0.
inline SmithForm smith_normal_form(const Matrix& input)
{
    const std::size_t m = input.rows(), n = input.cols();
    SmithForm s{Matrix::identity(m), input, Matrix::identity(n), Matrix::identity(m), Matrix::identity(n), 0};
    Matrix& D = s.diagonal;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            detail::as_integer(D(i, j));

    // Row op on D: row t += f*row u.  U tracks the same, U^{-1} the inverse column op.
    auto row_add = [&](std::size_t t, std::size_t u, const Scalar& f) {
        D.add_row(t, u, f);
        s.left.add_row(t, u, f);
        s.left_inverse.add_col(u, t, -f);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        s.left.swap_rows(a, b);
        s.left_inverse.swap_cols(a, b);
    };
    auto row_neg = [&](std::size_t a) {
        D.scale_row(a, -1);
        s.left.scale_row(a, -1);
        s.left_inverse.scale_col(a, -1);
    };
    auto col_add = [&](std::size_t t, std::size_t u, const Scalar& f) {
        D.add_col(t, u, f);
        s.right.add_col(t, u, f);
        s.right_inverse.add_row(u, t, -f);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        s.right.swap_cols(a, b);
        s.right_inverse.swap_rows(a, b);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D(i, j) == 0)
                    continue;
                Integer a = abs(numerator(D(i, j)));
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = a;
                }
            }
        if (!best)
            break;
        row_swap(t, best->first);
        col_swap(t, best->second);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            const Integer pivot = numerator(D(t, t));
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0)
                    continue;
                Integer q = detail::floor_div(numerator(D(i, t)), pivot);
                row_add(i, t, Scalar(-q));
                if (D(i, t) != 0) {
                    row_swap(t, i);
                    dirty = true;
                    break;
                }
            }
            if (dirty)
                continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0)
                    continue;
                Integer q = detail::floor_div(numerator(D(t, j)), pivot);
                col_add(j, t, Scalar(-q));
                if (D(t, j) != 0) {
                    col_swap(t, j);
                    dirty = true;
                    break;
                }
            }
            if (dirty)
                continue;
            // Divisibility of the trailing block by the pivot.
            for (std::size_t i = t + 1; i < m && !dirty; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (numerator(D(i, j)) % pivot != 0) {
                        row_add(t, i, 1);
                        dirty = true;
                        break;
                    }
        }
        if (D(t, t) < 0)
            row_neg(t);
        ++t;
    }
    s.rank = t;
    return s;
}

/// Result of Gauss-Jordan elimination over a field.
struct Echelon {
    Matrix reduced;                   // row-reduced form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Echelon row_echelon(const Matrix& input, const Ring& ring)
{
    if (!ring.is_field())
        throw RingError("row echelon form needs a field, got " + ring.name());
    Echelon e{input.reduced(ring), {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(p, row);
        Scalar inv = ring.inverse(a(row, col));
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(row, j) = ring.reduce(a(row, j) * inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            Scalar f = a(r, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(row, j) != 0)
                    a(r, j) = ring.reduce(a(r, j) - f * a(row, j));
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

inline std::size_t rank(const Matrix& m, const Ring& ring)
{
    if (ring.is_field())
        return row_echelon(m, ring).pivots.size();
    if (ring.kind() == Ring::Kind::Integers)
        return smith_normal_form(m).rank;
    throw RingError("rank over non-field " + ring.name() + " is not supported");
}

/// Basis of the right null space {x : M x = 0} over a field, as columns.
inline std::vector<std::vector<Scalar>> null_space(const Matrix& m, const Ring& ring)
{
    Echelon e = row_echelon(m, ring);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = ring.reduce(-e.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incremental submodule of R^n: over a field an echelon basis, over Z the
/// Hermite normal form of the generated lattice (no saturation).
/// Membership is decided by reduction against the stored rows.
class SubmoduleReducer {
public:
    SubmoduleReducer(Ring ring, std::size_t dimension) : ring_(ring), dim_(dimension)
    {
        if (!ring.is_field() && ring.kind() != Ring::Kind::Integers)
            throw RingError("submodule reduction over " + ring.name() + " is not supported");
    }

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds a generator; returns true if the span grew.
    bool insert(std::vector<Scalar> v)
    {
        normalize(v);
        if (ring_.is_field()) {
            reduce_in_place(v);
            auto lead = leading(v);
            if (!lead)
                return false;
            Scalar inv = ring_.inverse(v[*lead]);
            for (auto& x : v)
                x = ring_.reduce(x * inv);
            place(std::move(v), *lead);
            return true;
        }
        return insert_integer(std::move(v));
    }

    bool contains(std::vector<Scalar> v) const
    {
        normalize(v);
        reduce_in_place(v);
        return !leading(v).has_value();
    }

    /// Remainder after reduction (zero iff contained).
    std::vector<Scalar> remainder(std::vector<Scalar> v) const
    {
        normalize(v);
        reduce_in_place(v);
        return v;
    }

private:
    void normalize(std::vector<Scalar>& v) const
    {
        if (v.size() != dim_)
            throw std::invalid_argument("vector dimension mismatch");
        for (auto& x : v)
            x = ring_.reduce(x);
    }

    static std::optional<std::size_t> leading(const std::vector<Scalar>& v)
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                return i;
        return std::nullopt;
    }

    void reduce_in_place(std::vector<Scalar>& v) const
    {
        for (const auto& [col, row] : rows_) {
            if (v[col] == 0)
                continue;
            if (ring_.is_field()) {
                Scalar f = v[col];
                for (std::size_t j = col; j < dim_; ++j)
                    if (row[j] != 0)
                        v[j] = ring_.reduce(v[j] - f * row[j]);
            }
            else {
                Integer a = numerator(v[col]), p = numerator(row[col]);
                if (a % p != 0)
                    return;  // cannot clear this column: not a member
                Integer q = a / p;
                for (std::size_t j = col; j < dim_; ++j)
                    if (row[j] != 0)
                        v[j] -= Scalar(q) * row[j];
            }
        }
    }

    void place(std::vector<Scalar> v, std::size_t col)
    {
        rows_.emplace_back(col, std::move(v));
        std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    bool insert_integer(std::vector<Scalar> v)
    {
        bool grew = false;
        while (true) {
            auto lead = leading(v);
            if (!lead)
                return grew;
            std::size_t col = *lead;
            auto it = std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return r.first == col; });
            if (it == rows_.end()) {
                if (v[col] < 0)
                    for (auto& x : v)
                        x = -x;
                place(std::move(v), col);
                return true;
            }
            // Euclid on the two rows sharing this leading column.
            std::vector<Scalar>& row = it->second;
            while (v[col] != 0) {
                Integer q = detail::floor_div(numerator(row[col]), numerator(v[col]));
                for (std::size_t j = col; j < dim_; ++j)
                    row[j] -= Scalar(q) * v[j];
                std::swap(row, v);
            }
            if (row[col] < 0)
                for (auto& x : row)
                    x = -x;
            grew = true;
        }
    }

    Ring ring_;
    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

}  // namespace s2cobar
