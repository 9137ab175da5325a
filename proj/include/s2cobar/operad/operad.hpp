#pragma once

#include "s2cobar/core/linear_combination.hpp"
#include "s2cobar/operad/surjection.hpp"

#include <set>
#include <vector>

namespace s2cobar {

using OpElem = LinComb<Surj>;

inline OpElem op(const Ring& ring, const Surj& u, const Scalar& c = 1)
{
    return OpElem(ring, u, c);
}

/// (1,2,...,n)
inline Surj product_generator(int n)
{
    Surj u;
    for (int i = 1; i <= n; ++i)
        u.push_back(i);
    return u;
}

/// (1,2,1,...,1,n+1,1): the brace with n arguments.
inline Surj brace_generator(int n)
{
    Surj u{1};
    for (int i = 2; i <= n + 1; ++i) {
        u.push_back(i);
        u.push_back(1);
    }
    return u;
}

/// Differential on a single surjection: a signed sum over entry deletions.
/// Deleting the k-th caesura carries (-1)^(k-1); deleting a last occurrence
/// carries (-1)^k where k numbers the caesura holding the previous occurrence.
inline OpElem differential(const Ring& ring, const Surj& u)
{
    OpElem out(ring);
    const int n = arity(u);
    const std::size_t len = u.size();
    std::vector<bool> cz = caesuras(u);
    std::vector<int> rank(len, 0), last_rank(static_cast<std::size_t>(n) + 1, 0), count(static_cast<std::size_t>(n) + 1, 0);
    int k = 0;
    for (int v : u)
        ++count[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t v = static_cast<std::size_t>(u[i]);
        if (cz[i])
            rank[i] = ++k;
        if (count[v] < 2) {
            if (cz[i])
                last_rank[v] = rank[i];
            continue;
        }
        int sign;
        if (cz[i])
            sign = sign_of(rank[i] - 1);
        else
            sign = sign_of(last_rank[v]);
        if (cz[i])
            last_rank[v] = rank[i];
        if (i > 0 && i + 1 < len && u[i - 1] == u[i + 1])
            continue;
        Surj w;
        w.reserve(len - 1);
        for (std::size_t j = 0; j < len; ++j)
            if (j != i)
                w.push_back(u[j]);
        out.add(w, sign);
    }
    return out;
}

inline OpElem differential(const OpElem& x)
{
    OpElem out(x.ring());
    for (const auto& [u, c] : x)
        out.add(differential(x.ring(), u), c);
    return out;
}

namespace detail {

inline long long count_inversions(const std::vector<int>& tags)
{
    long long inv = 0;
    for (std::size_t a = 0; a < tags.size(); ++a)
        for (std::size_t b = a + 1; b < tags.size(); ++b)
            if (tags[a] > tags[b])
                ++inv;
    return inv;
}

}  // namespace detail

/// Partial composition u o_k v on surjections. Each occurrence of k in u is
/// replaced by a block of v, consecutive blocks sharing their cut entry.
/// The sign is the parity of the shuffle of caesuras relative to the order
/// (caesuras of u, then caesuras of v).
inline OpElem compose(const Ring& ring, const Surj& u, int k, const Surj& v)
{
    const int r = arity(u), s = arity(v);
    if (k < 1 || k > r)
        throw SlotOutOfRange("slot " + std::to_string(k) + " outside 1.." + std::to_string(r));
    OpElem out(ring);
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] == k)
            occ.push_back(i);
    const std::size_t m = occ.size(), l = v.size();

    std::vector<bool> ucz = caesuras(u), vcz = caesuras(v);
    std::vector<int> urank(u.size(), -1), vrank(l, -1);
    int next = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (ucz[i])
            urank[i] = next++;
    for (std::size_t j = 0; j < l; ++j)
        if (vcz[j])
            vrank[j] = next++;

    std::vector<std::size_t> cut(m + 1, 0);
    cut[m] = l - 1;
    auto emit = [&]() {
        Surj w;
        std::vector<int> tags;
        w.reserve(u.size() + l + m);
        std::size_t t = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] != k) {
                w.push_back(u[i] > k ? u[i] + s - 1 : u[i]);
                if (urank[i] >= 0)
                    tags.push_back(urank[i]);
                continue;
            }
            for (std::size_t j = cut[t]; j <= cut[t + 1]; ++j) {
                w.push_back(v[j] + k - 1);
                if (j == cut[t + 1] && t + 1 < m)
                    tags.push_back(urank[i]);
                else if (vrank[j] >= 0)
                    tags.push_back(vrank[j]);
            }
            ++t;
        }
        out.add(w, sign_of(detail::count_inversions(tags)));
    };
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == m) {
            emit();
            return;
        }
        for (std::size_t c = cut[t - 1]; c <= l - 1; ++c) {
            cut[t] = c;
            self(self, t + 1);
        }
    };
    if (m == 1)
        emit();
    else
        rec(rec, 1);
    return out;
}

inline OpElem compose(const OpElem& x, int k, const OpElem& y)
{
    OpElem out(x.ring());
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y)
            out.add(compose(x.ring(), u, k, v), a * b);
    return out;
}

/// gamma(w; u_1, ..., u_m) as successive partial compositions from the left.
inline OpElem gamma(const OpElem& w, const std::vector<OpElem>& us)
{
    OpElem out = w;
    int offset = 0;
    for (const auto& u : us) {
        if (u.is_zero())
            return OpElem(w.ring());
        int a = arity(u.begin()->first);
        out = compose(out, offset + 1, u);
        offset += a;
    }
    return out;
}

/// pi . u renames each value v to pi(v); `perm` lists pi(1), ..., pi(n).
inline Surj sigma_act(const std::vector<int>& perm, const Surj& u)
{
    if (static_cast<int>(perm.size()) != arity(u))
        throw ArityMismatch("permutation size " + std::to_string(perm.size()) + " vs arity " +
                            std::to_string(arity(u)));
    Surj w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = perm[static_cast<std::size_t>(u[i] - 1)];
    return w;
}

inline OpElem sigma_act(const std::vector<int>& perm, const OpElem& x)
{
    return x.map_keys([&](const Surj& u) { return sigma_act(perm, u); });
}

/// Inserts j just before the first entry whose value is not in S.
inline std::optional<Surj> insertion_homotopy(int j, const std::set<int>& S, const Surj& u)
{
    Surj w;
    w.reserve(u.size() + 1);
    bool done = false;
    for (int v : u) {
        if (!done && !S.count(v)) {
            w.push_back(j);
            done = true;
        }
        w.push_back(v);
    }
    if (!done)
        w.push_back(j);
    if (is_degenerate(w))
        return std::nullopt;
    return w;
}

inline OpElem insertion_homotopy(int j, const std::set<int>& S, const OpElem& x)
{
    OpElem out(x.ring());
    for (const auto& [u, c] : x)
        if (auto w = insertion_homotopy(j, S, u))
            out.add(*w, c);
    return out;
}

/// The correction term t_(j,S) of the identity dh + hd = 1 + t.
inline OpElem t_operator(const Ring& ring, int j, const std::set<int>& S, const Surj& u)
{
    OpElem out(ring);
    if (std::count(u.begin(), u.end(), j) != 1)
        return out;
    auto first = std::find_if(u.begin(), u.end(), [&](int v) { return !S.count(v); });
    if (first != u.end() && *first == j) {
        out.add(u, -1);
        return out;
    }
    Surj rest;
    for (int v : u)
        if (v != j)
            rest.push_back(v);
    Surj w;
    bool done = false;
    for (int v : rest) {
        if (!done && !S.count(v)) {
            w.push_back(j);
            done = true;
        }
        w.push_back(v);
    }
    if (!done)
        w.push_back(j);
    if (!is_degenerate(w))
        out.add(w, -1);
    return out;
}

inline OpElem t_operator(int j, const std::set<int>& S, const OpElem& x)
{
    OpElem out(x.ring());
    for (const auto& [u, c] : x)
        out.add(t_operator(x.ring(), j, S, u), c);
    return out;
}

inline std::string to_string(const OpElem& x)
{
    return x.to_string([](const Surj& u) { return to_string(u); });
}

}  // namespace s2cobar
