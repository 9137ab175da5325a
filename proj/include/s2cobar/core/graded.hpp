#pragma once

#include "s2cobar/core/linear_combination.hpp"

#include <numeric>
#include <utility>
#include <vector>

// Structures in this library are duck-typed. A graded structure S provides
//   key_type, ring(), degree(k), unit_key(), is_unit(k), differential(k), label(k)
// and, as applicable,
//   product(a, b)                 -> LinComb<key_type>
//   reduced_coproduct(c)          -> LinComb<std::pair<key_type, key_type>>
//   brace(x, {y1, ..., yn})       -> LinComb<key_type>        (n >= 1)
//   basis(degree)                 -> std::vector<key_type>
// The unit key spans the image of the unit and the augmentation kills every
// other basis key.

namespace s2cobar {

template <class K>
using PairComb = LinComb<std::pair<K, K>>;
template <class K>
using WordComb = LinComb<std::vector<K>>;

/// Koszul sign of listing elements of the given degrees in the order `perm`
/// (perm[i] is the original position of the i-th output).
inline int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm)
{
    long long parity = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                parity += static_cast<long long>(degrees[static_cast<std::size_t>(perm[a])]) *
                          degrees[static_cast<std::size_t>(perm[b])];
    return sign_of(parity);
}

/// Degree of a homogeneous combination (0 for the zero element).
/// Human-readable form "c1 label1 + c2 label2" using the structure's labels.
template <class S>
std::string format_element(const S& s, const LinComb<typename S::key_type>& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, c] : x) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += to_string(c) + " ";
        out += s.label(k);
    }
    return out;
}

template <class S>
int degree_of(const S& s, const LinComb<typename S::key_type>& x)
{
    if (x.is_zero())
        return 0;
    int d = s.degree(x.begin()->first);
    for (const auto& [k, c] : x)
        if (s.degree(k) != d)
            throw std::invalid_argument("inhomogeneous element");
    return d;
}

template <class S>
LinComb<typename S::key_type> unit_element(const S& s)
{
    return LinComb<typename S::key_type>(s.ring(), s.unit_key());
}

template <class S>
LinComb<typename S::key_type> basis_element(const S& s, const typename S::key_type& k, const Scalar& c = 1)
{
    return LinComb<typename S::key_type>(s.ring(), k, c);
}

template <class S>
LinComb<typename S::key_type> differential_of(const S& s, const LinComb<typename S::key_type>& x)
{
    LinComb<typename S::key_type> out(s.ring());
    for (const auto& [k, c] : x)
        out.add(s.differential(k), c);
    return out;
}

template <class S>
LinComb<typename S::key_type> multiply(const S& s, const LinComb<typename S::key_type>& a,
                                       const LinComb<typename S::key_type>& b)
{
    LinComb<typename S::key_type> out(s.ring());
    for (const auto& [x, c] : a)
        for (const auto& [y, e] : b)
            out.add(s.product(x, y), c * e);
    return out;
}

template <class S>
LinComb<typename S::key_type> multiply_all(const S& s, const std::vector<LinComb<typename S::key_type>>& xs)
{
    LinComb<typename S::key_type> out = unit_element(s);
    for (const auto& x : xs)
        out = multiply(s, out, x);
    return out;
}

/// x{y_1, ..., y_n} extended multilinearly; x{} = x.
template <class S>
LinComb<typename S::key_type> brace_of(const S& s, const LinComb<typename S::key_type>& x,
                                       const std::vector<LinComb<typename S::key_type>>& ys)
{
    using K = typename S::key_type;
    if (ys.empty())
        return x;
    LinComb<K> out(s.ring());
    std::vector<K> keys(ys.size());
    auto rec = [&](auto&& self, std::size_t i, const Scalar& coef) -> void {
        if (i == ys.size()) {
            for (const auto& [xk, xc] : x)
                out.add(s.brace(xk, keys), coef * xc);
            return;
        }
        for (const auto& [k, c] : ys[i]) {
            keys[i] = k;
            self(self, i + 1, coef * c);
        }
    };
    rec(rec, 0, Scalar(1));
    return out;
}

/// Full coproduct c ⊗ 1 + 1 ⊗ c + reduced part.
template <class S>
PairComb<typename S::key_type> full_coproduct(const S& s, const typename S::key_type& c)
{
    PairComb<typename S::key_type> out(s.ring());
    const auto one = s.unit_key();
    if (s.is_unit(c)) {
        out.add({one, one}, 1);
        return out;
    }
    out.add({c, one}, 1);
    out.add({one, c}, 1);
    out.add(s.reduced_coproduct(c));
    return out;
}

/// Left-normed iterated full diagonal with q tensor factors.
template <class S>
WordComb<typename S::key_type> iterated_coproduct(const S& s, const typename S::key_type& c, int q)
{
    using K = typename S::key_type;
    WordComb<K> cur(s.ring(), std::vector<K>{c});
    for (int step = 1; step < q; ++step) {
        WordComb<K> next(s.ring());
        for (const auto& [w, coef] : cur) {
            for (const auto& [pr, e] : full_coproduct(s, w.front())) {
                std::vector<K> v;
                v.reserve(w.size() + 1);
                v.push_back(pr.first);
                v.push_back(pr.second);
                v.insert(v.end(), w.begin() + 1, w.end());
                next.add(v, coef * e);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

/// Left-normed iterated reduced diagonal with k factors (k = 1 gives c itself).
template <class S>
WordComb<typename S::key_type> iterated_reduced_coproduct(const S& s, const typename S::key_type& c, int k)
{
    using K = typename S::key_type;
    WordComb<K> cur(s.ring());
    if (s.is_unit(c))
        return cur;
    cur.add(std::vector<K>{c}, 1);
    for (int step = 1; step < k && !cur.is_zero(); ++step) {
        WordComb<K> next(s.ring());
        for (const auto& [w, coef] : cur)
            for (const auto& [pr, e] : s.reduced_coproduct(w.front())) {
                std::vector<K> v;
                v.reserve(w.size() + 1);
                v.push_back(pr.first);
                v.push_back(pr.second);
                v.insert(v.end(), w.begin() + 1, w.end());
                next.add(v, coef * e);
            }
        cur = std::move(next);
    }
    return cur;
}

/// All nonzero iterated reduced diagonals of c, indexed by number of factors.
template <class S>
std::vector<WordComb<typename S::key_type>> all_reduced_diagonals(const S& s, const typename S::key_type& c,
                                                                  int max_factors = 64)
{
    std::vector<WordComb<typename S::key_type>> out;
    for (int k = 1; k <= max_factors; ++k) {
        auto w = iterated_reduced_coproduct(s, c, k);
        if (w.is_zero())
            return out;
        out.push_back(std::move(w));
    }
    throw std::runtime_error("coalgebra is not conilpotent within " + std::to_string(max_factors) + " factors");
}

/// Product of combinations in a tensor power: (a1 ⊗ ... ) , entries multiplied in s.
/// Expands a list of combinations into a combination of words (no signs).
template <class K>
WordComb<K> expand_words(const Ring& ring, const std::vector<LinComb<K>>& factors)
{
    WordComb<K> out(ring);
    std::vector<K> cur(factors.size());
    auto rec = [&](auto&& self, std::size_t i, const Scalar& coef) -> void {
        if (i == factors.size()) {
            out.add(cur, coef);
            return;
        }
        for (const auto& [k, c] : factors[i]) {
            cur[i] = k;
            self(self, i + 1, coef * c);
        }
    };
    rec(rec, 0, Scalar(1));
    return out;
}

}  // namespace s2cobar
