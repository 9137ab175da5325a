#pragma once

#include "s2cobar/core/linear_combination.hpp"
#include "s2cobar/core/matrix.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace s2cobar {

/// Finite-type chain complex stored on a window of degrees [lo, hi].
/// d[k] is the block C_k -> C_{k-1} (rows: dim C_{k-1}, columns: dim C_k).
/// Outside the window the complex is known to vanish when the matching
/// `zero_below` / `zero_above` flag is set; otherwise those degrees are unknown.
struct ChainComplex {
    Ring ring = Ring::integers();
    int lo = 0, hi = -1;
    bool zero_below = false, zero_above = false;
    std::map<int, std::vector<std::string>> basis;
    std::map<int, Matrix> d;

    bool knows(int k) const
    {
        return (k >= lo && k <= hi) || (k < lo && zero_below) || (k > hi && zero_above);
    }
    std::size_t dim(int k) const
    {
        auto it = basis.find(k);
        return it == basis.end() ? 0 : it->second.size();
    }
    /// Differential block out of degree k, or nullopt when not determined.
    std::optional<Matrix> block(int k) const
    {
        if (auto it = d.find(k); it != d.end())
            return it->second;
        bool src_zero = (k > hi && zero_above) || (k < lo && zero_below);
        bool dst_zero = (k - 1 < lo && zero_below) || (k - 1 > hi && zero_above);
        if ((src_zero || dst_zero) && knows(k) && knows(k - 1))
            return Matrix(dim(k - 1), dim(k));
        return std::nullopt;
    }
    /// Degrees k with d_{k-1} d_k = 0 failing.
    std::vector<int> square_failures() const
    {
        std::vector<int> bad;
        for (int k = lo; k <= hi; ++k) {
            auto a = block(k), b = block(k - 1);
            if (a && b && !(*b * *a).reduced(ring).is_zero())
                bad.push_back(k);
        }
        return bad;
    }
};

/// Degree-`shift` map between complexes; blocks[k] : X_k -> Y_{k+shift}.
struct ChainMap {
    int shift = 0;
    std::map<int, Matrix> blocks;

    Matrix block(int k, const ChainComplex& X, const ChainComplex& Y) const
    {
        auto it = blocks.find(k);
        if (it != blocks.end())
            return it->second;
        return Matrix(Y.dim(k + shift), X.dim(k));
    }
};

/// A complex built from a lazily described structure, remembering which key
/// sits at which basis index.
template <class Key>
struct KeyedComplex {
    ChainComplex complex;
    std::map<int, std::vector<Key>> keys;
    std::map<Key, std::pair<int, std::size_t>> index;

    std::vector<Scalar> coordinates(int degree, const LinComb<Key>& x) const
    {
        std::vector<Scalar> v(complex.dim(degree), 0);
        for (const auto& [k, c] : x) {
            auto it = index.find(k);
            if (it == index.end() || it->second.first != degree)
                throw WindowExceeded("element outside the enumerated basis in degree " + std::to_string(degree));
            v[it->second.second] = c;
        }
        return v;
    }
    LinComb<Key> element(int degree, const std::vector<Scalar>& v) const
    {
        LinComb<Key> x(complex.ring);
        const auto& ks = keys.at(degree);
        for (std::size_t i = 0; i < v.size(); ++i)
            x.add(ks[i], v[i]);
        return x;
    }
};

/// Builds the complex with basis(k) in degrees [lo, hi] and differential
/// `diff(key)`. Terms of a differential must lie in the enumerated basis.
template <class Key, class BasisFn, class DiffFn, class LabelFn>
KeyedComplex<Key> build_complex(const Ring& ring, int lo, int hi, BasisFn&& basis, DiffFn&& diff, LabelFn&& label,
                                bool zero_below = false, bool zero_above = false)
{
    KeyedComplex<Key> out;
    out.complex.ring = ring;
    out.complex.lo = lo;
    out.complex.hi = hi;
    out.complex.zero_below = zero_below;
    out.complex.zero_above = zero_above;
    for (int k = lo; k <= hi; ++k) {
        std::vector<Key> ks = basis(k);
        auto& labels = out.complex.basis[k];
        for (std::size_t i = 0; i < ks.size(); ++i) {
            out.index[ks[i]] = {k, i};
            labels.push_back(label(ks[i]));
        }
        out.keys[k] = std::move(ks);
    }
    for (int k = lo; k <= hi; ++k) {
        if (k == lo && !zero_below)
            continue;
        Matrix m(out.complex.dim(k - 1), out.complex.dim(k));
        const auto& ks = out.keys[k];
        for (std::size_t j = 0; j < ks.size(); ++j) {
            LinComb<Key> dx = diff(ks[j]);
            if (k == lo && !dx.is_zero())
                throw WindowExceeded("differential leaves the window below degree " + std::to_string(lo));
            for (const auto& [key, c] : dx) {
                auto it = out.index.find(key);
                if (it == out.index.end() || it->second.first != k - 1)
                    throw WindowExceeded("differential term outside the enumerated basis in degree " +
                                         std::to_string(k - 1));
                m(it->second.second, j) = c;
            }
        }
        out.complex.d[k] = std::move(m);
    }
    return out;
}

/// Matrix of the linear map `f` (given on keys) from X_k to Y_{k+shift}.
template <class KX, class KY, class F>
ChainMap build_map(const KeyedComplex<KX>& X, const KeyedComplex<KY>& Y, int shift, F&& f)
{
    ChainMap m;
    m.shift = shift;
    for (const auto& [k, ks] : X.keys) {
        if (!Y.complex.knows(k + shift))
            continue;
        Matrix block(Y.complex.dim(k + shift), ks.size());
        for (std::size_t j = 0; j < ks.size(); ++j) {
            LinComb<KY> fx = f(ks[j]);
            auto v = Y.coordinates(k + shift, fx);
            for (std::size_t i = 0; i < v.size(); ++i)
                block(i, j) = v[i];
        }
        m.blocks[k] = std::move(block);
    }
    return m;
}

/// Degrees k in the common window where d f != (-1)^shift f d.
inline std::vector<int> chain_map_failures(const ChainComplex& X, const ChainComplex& Y, const ChainMap& f)
{
    std::vector<int> bad;
    for (int k = X.lo; k <= X.hi; ++k) {
        if (!f.blocks.count(k) || !f.blocks.count(k - 1))
            continue;
        auto dx = X.block(k);
        auto dy = Y.block(k + f.shift);
        if (!dx || !dy)
            continue;
        Matrix lhs = *dy * f.block(k, X, Y);
        Matrix rhs = f.block(k - 1, X, Y) * *dx;
        bool ok = true;
        for (std::size_t i = 0; i < lhs.rows() && ok; ++i)
            for (std::size_t j = 0; j < lhs.cols() && ok; ++j)
                ok = X.ring.reduce(lhs(i, j) - sign_of(f.shift) * rhs(i, j)) == 0;
        if (!ok)
            bad.push_back(k);
    }
    return bad;
}

/// Shifts degrees by k; d(s^k x) = (-1)^k s^k dx.
inline ChainComplex suspend(const ChainComplex& X, int k)
{
    ChainComplex Y;
    Y.ring = X.ring;
    Y.lo = X.lo + k;
    Y.hi = X.hi + k;
    Y.zero_below = X.zero_below;
    Y.zero_above = X.zero_above;
    for (const auto& [deg, labels] : X.basis) {
        auto& out = Y.basis[deg + k];
        for (const auto& l : labels)
            out.push_back(k == 0 ? l : "s^" + std::to_string(k) + "(" + l + ")");
    }
    for (const auto& [deg, m] : X.d) {
        Matrix b = m;
        if (odd(k))
            for (std::size_t i = 0; i < b.rows(); ++i)
                b.scale_row(i, -1);
        Y.d[deg + k] = b.reduced(X.ring);
    }
    return Y;
}

/// Tensor product of complexes vanishing outside their windows, with the
/// basis of degree n ordered by (degree of x, index of x, index of y).
inline ChainComplex tensor(const ChainComplex& X, const ChainComplex& Y)
{
    if (!(X.zero_below && X.zero_above && Y.zero_below && Y.zero_above))
        throw WindowTooNarrow("tensor needs complexes known to vanish outside their windows");
    ChainComplex T;
    T.ring = X.ring;
    T.lo = X.lo + Y.lo;
    T.hi = X.hi + Y.hi;
    T.zero_below = T.zero_above = true;
    // index of (p, q, i, j) inside degree p + q
    std::map<std::tuple<int, int, std::size_t, std::size_t>, std::size_t> where;
    for (int n = T.lo; n <= T.hi; ++n) {
        auto& labels = T.basis[n];
        for (int p = X.lo; p <= X.hi; ++p) {
            int q = n - p;
            for (std::size_t i = 0; i < X.dim(p); ++i)
                for (std::size_t j = 0; j < Y.dim(q); ++j) {
                    where[{p, q, i, j}] = labels.size();
                    labels.push_back(X.basis.at(p)[i] + "⊗" + Y.basis.at(q)[j]);
                }
        }
    }
    for (int n = T.lo; n <= T.hi; ++n) {
        Matrix m(T.dim(n - 1), T.dim(n));
        for (int p = X.lo; p <= X.hi; ++p) {
            int q = n - p;
            auto dx = X.block(p);
            auto dy = Y.block(q);
            for (std::size_t i = 0; i < X.dim(p); ++i)
                for (std::size_t j = 0; j < Y.dim(q); ++j) {
                    std::size_t col = where.at({p, q, i, j});
                    for (std::size_t a = 0; a < X.dim(p - 1); ++a)
                        if ((*dx)(a, i) != 0)
                            m(where.at({p - 1, q, a, j}), col) += (*dx)(a, i);
                    for (std::size_t b = 0; b < Y.dim(q - 1); ++b)
                        if ((*dy)(b, j) != 0)
                            m(where.at({p, q - 1, i, b}), col) += sign_of(p) * (*dy)(b, j);
                }
        }
        T.d[n] = m.reduced(T.ring);
    }
    return T;
}

/// Cone(f)_n = X_{n-1} + Y_n with d(x, y) = (-dx, f(x) + dy), for degree-0 f.
/// Stored on the degrees where both summands are known; its homology is
/// determined on [lo + 1, hi - 1].
inline ChainComplex mapping_cone(const ChainComplex& X, const ChainComplex& Y, const ChainMap& f)
{
    if (f.shift != 0)
        throw std::invalid_argument("mapping cone needs a degree-0 map");
    ChainComplex C;
    C.ring = X.ring;
    C.zero_below = X.zero_below && Y.zero_below;
    C.zero_above = X.zero_above && Y.zero_above;
    if (C.zero_below)
        C.lo = std::min(X.lo + 1, Y.lo) - 1;
    else
        C.lo = std::max(X.zero_below ? Y.lo : X.lo + 1, Y.zero_below ? X.lo + 1 : Y.lo);
    if (C.zero_above)
        C.hi = std::max(X.hi + 1, Y.hi) + 1;
    else
        C.hi = std::min(X.zero_above ? Y.hi : X.hi + 1, Y.zero_above ? X.hi + 1 : Y.hi);
    for (int n = C.lo; n <= C.hi; ++n) {
        auto& labels = C.basis[n];
        if (X.basis.count(n - 1))
            for (const auto& l : X.basis.at(n - 1))
                labels.push_back("x:" + l);
        if (Y.basis.count(n))
            for (const auto& l : Y.basis.at(n))
                labels.push_back("y:" + l);
    }
    for (int n = C.lo + 1; n <= C.hi; ++n) {
        auto dx = X.block(n - 1);
        auto dy = Y.block(n);
        bool map_known = f.blocks.count(n - 1) || X.dim(n - 1) == 0 || Y.dim(n - 1) == 0;
        if (!dx || !dy || !map_known)
            throw WindowTooNarrow("mapping cone block missing in degree " + std::to_string(n));
        const std::size_t xs = X.dim(n - 1), xt = X.dim(n - 2), ys = Y.dim(n), yt = Y.dim(n - 1);
        Matrix m(xt + yt, xs + ys);
        Matrix fb = f.block(n - 1, X, Y);
        for (std::size_t j = 0; j < xs; ++j) {
            for (std::size_t i = 0; i < xt; ++i)
                m(i, j) = -(*dx)(i, j);
            for (std::size_t i = 0; i < yt; ++i)
                m(xt + i, j) = fb(i, j);
        }
        for (std::size_t j = 0; j < ys; ++j)
            for (std::size_t i = 0; i < yt; ++i)
                m(xt + i, xs + j) = (*dy)(i, j);
        C.d[n] = m.reduced(C.ring);
    }
    return C;
}

}  // namespace s2cobar
