#pragma once

#include "s2cobar/core/graded.hpp"
#include "s2cobar/core/report.hpp"

#include <string>
#include <vector>

namespace s2cobar {

namespace detail {

template <class S>
std::string show(const S& A, const LinComb<typename S::key_type>& x)
{
    return x.to_string([&](const typename S::key_type& k) { return A.label(k); });
}

template <class S>
std::string show_inputs(const S& A, const std::vector<LinComb<typename S::key_type>>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + show(A, xs[i]);
    return s;
}

}  // namespace detail

/// d(x{y_1..y_n}) against the five-term expansion, signs as printed:
///   (-1)^n x{y_1..y_{n-1}} y_n + (-1)^{|x||y_1| + (n-1)|y_1|} y_1 x{y_2..y_n}
///   + Σ_{i>=2} (-1)^{i-1} x{.., y_{i-1} y_i, ..} + (-1)^n (dx){y}
///   + Σ_i (-1)^{n + |x| + Σ_{j<i}|y_j|} x{.., dy_i, ..}.
template <class S>
CheckResult check_identity_diff(const S& A, const LinComb<typename S::key_type>& x,
                                const std::vector<LinComb<typename S::key_type>>& ys)
{
    using K = typename S::key_type;
    CheckResult r("differential of braces");
    const int n = static_cast<int>(ys.size());
    if (n == 0)
        return r;
    const int dx = degree_of(A, x);
    std::vector<int> dy;
    for (const auto& y : ys)
        dy.push_back(degree_of(A, y));

    LinComb<K> lhs = differential_of(A, brace_of(A, x, ys));
    LinComb<K> rhs(A.ring());
    std::vector<LinComb<K>> head(ys.begin(), ys.end() - 1), tail(ys.begin() + 1, ys.end());
    rhs.add(multiply(A, brace_of(A, x, head), ys.back()), sign_of(n));
    rhs.add(multiply(A, ys.front(), brace_of(A, x, tail)),
            sign_of(static_cast<long long>(dx) * dy[0] + static_cast<long long>(n - 1) * dy[0]));
    for (int i = 2; i <= n; ++i) {
        std::vector<LinComb<K>> merged;
        for (int j = 1; j <= n; ++j) {
            if (j == i - 1)
                merged.push_back(multiply(A, ys[j - 1], ys[j]));
            else if (j != i)
                merged.push_back(ys[j - 1]);
        }
        rhs.add(brace_of(A, x, merged), sign_of(i - 1));
    }
    rhs.add(brace_of(A, differential_of(A, x), ys), sign_of(n));
    long long gamma = n + dx;
    for (int i = 1; i <= n; ++i) {
        std::vector<LinComb<K>> v = ys;
        v[i - 1] = differential_of(A, ys[i - 1]);
        rhs.add(brace_of(A, x, v), sign_of(gamma));
        gamma += dy[i - 1];
    }
    r.expect(lhs == rhs, "x=" + detail::show(A, x) + " ys=(" + detail::show_inputs(A, ys) +
                             "): lhs " + detail::show(A, lhs) + " rhs " + detail::show(A, rhs));
    return r;
}

/// (xy){y_1..y_n} = Σ_i (-1)^{γ_i} x{y_1..y_i} y{y_{i+1}..y_n} with
/// γ_i = (Σ_{k<=i}|y_k|)|y| + (n-i)(|x| + Σ_{j<=i}|y_j|).
template <class S>
CheckResult check_identity_mult(const S& A, const LinComb<typename S::key_type>& x,
                                const LinComb<typename S::key_type>& y,
                                const std::vector<LinComb<typename S::key_type>>& ys)
{
    using K = typename S::key_type;
    CheckResult r("braces on products");
    const int n = static_cast<int>(ys.size());
    if (n == 0)
        return r;
    const int dx = degree_of(A, x), dyy = degree_of(A, y);
    LinComb<K> lhs = brace_of(A, multiply(A, x, y), ys);
    LinComb<K> rhs(A.ring());
    long long sum = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0)
            sum += degree_of(A, ys[i - 1]);
        std::vector<LinComb<K>> first(ys.begin(), ys.begin() + i), second(ys.begin() + i, ys.end());
        long long gamma = sum * dyy + static_cast<long long>(n - i) * (dx + sum);
        rhs.add(multiply(A, brace_of(A, x, first), brace_of(A, y, second)), sign_of(gamma));
    }
    r.expect(lhs == rhs, "x=" + detail::show(A, x) + " y=" + detail::show(A, y) + " ys=(" +
                             detail::show_inputs(A, ys) + "): lhs " + detail::show(A, lhs) + " rhs " +
                             detail::show(A, rhs));
    return r;
}

/// Non-unit basis elements of degrees in [lo, hi].
template <class S>
std::vector<typename S::key_type> augmented_basis(const S& A, int lo, int hi)
{
    std::vector<typename S::key_type> out;
    for (int d = lo; d <= hi; ++d)
        for (auto& k : A.basis(d))
            if (!A.is_unit(k))
                out.push_back(k);
    return out;
}

/// Both brace identities over every tuple drawn from `pool` with at most
/// `max_n` brace inputs and total output degree at most `max_degree`.
template <class S>
CheckResult check_identities_exhaustive(const S& A, const std::vector<typename S::key_type>& pool, int max_n,
                                        int max_degree)
{
    using K = typename S::key_type;
    CheckResult r("brace identities");
    std::vector<K> ys;
    auto rec = [&](auto&& self, int deg) -> void {
        if (!ys.empty()) {
            std::vector<LinComb<K>> yl;
            for (auto& y : ys)
                yl.push_back(basis_element(A, y));
            for (auto& x : pool) {
                int d = deg + A.degree(x) + static_cast<int>(ys.size());
                if (d > max_degree)
                    continue;
                r.absorb(check_identity_diff(A, basis_element(A, x), yl));
                for (auto& y : pool)
                    if (d + A.degree(y) <= max_degree)
                        r.absorb(check_identity_mult(A, basis_element(A, x), basis_element(A, y), yl));
            }
        }
        if (static_cast<int>(ys.size()) == max_n)
            return;
        for (auto& y : pool) {
            if (deg + A.degree(y) > max_degree)
                continue;
            ys.push_back(y);
            self(self, deg + A.degree(y));
            ys.pop_back();
        }
    };
    rec(rec, 0);
    return r;
}

/// Sq^{n-1}(z) = z{z} for a cycle z over Z/2.
template <class S>
LinComb<typename S::key_type> steenrod_sq(const S& A, const LinComb<typename S::key_type>& z)
{
    if (!(A.ring() == Ring::mod(2)))
        throw RingError("the Steenrod operation z{z} is defined over Z/2");
    if (!differential_of(A, z).is_zero())
        throw NotACycle("Sq needs a cycle");
    return brace_of(A, z, {z});
}

}  // namespace s2cobar
