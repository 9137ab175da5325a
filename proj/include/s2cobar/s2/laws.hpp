#pragma once

#include "s2cobar/core/report.hpp"
#include "s2cobar/s2/brace_expression.hpp"
#include "s2cobar/s2/identities.hpp"

#include <algorithm>
#include <random>
#include <vector>

// Sampled checks that an S2-algebra's evaluation is an operad action.

namespace s2cobar {

inline std::vector<Surj> s2_operations(int max_arity, int max_degree)
{
    std::vector<Surj> out;
    for (int n = 1; n <= max_arity; ++n)
        for (int d = 0; d <= max_degree; ++d)
            for (auto& u : enumerate_surjections(n, d, 2))
                out.push_back(u);
    return out;
}

namespace detail {

template <class S, class Rng>
std::vector<LinComb<typename S::key_type>> pick_inputs(const S& A, const std::vector<typename S::key_type>& pool,
                                                       int count, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<LinComb<typename S::key_type>> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(basis_element(A, pool[pick(rng)]));
    return xs;
}

}  // namespace detail

/// evaluate(u ∘_i v, a) = (-1)^{|v|(|a_1|+..+|a_{i-1}|)} evaluate(u, .., evaluate(v, a_i..), ..).
template <class S>
CheckResult check_action_law(const S& A, const std::vector<typename S::key_type>& pool, int max_arity, int max_degree,
                             int samples, unsigned seed)
{
    using K = typename S::key_type;
    CheckResult r("operad action law");
    auto ops = s2_operations(max_arity, max_degree);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    for (int t = 0; t < samples; ++t) {
        const Surj& u = ops[pick(rng)];
        const Surj& v = ops[pick(rng)];
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(arity(u)));
        OpElem w = compose(A.ring(), u, i, v);
        int total = arity(u) + arity(v) - 1;
        auto a = detail::pick_inputs(A, pool, total, rng);
        LinComb<K> lhs = evaluate(A, w, a);
        std::vector<LinComb<K>> inner(a.begin() + i - 1, a.begin() + i - 1 + arity(v));
        std::vector<LinComb<K>> outer(a.begin(), a.begin() + i - 1);
        long long before = 0;
        for (auto& x : outer)
            before += degree_of(A, x);
        outer.push_back(evaluate(A, v, inner));
        outer.insert(outer.end(), a.begin() + i - 1 + arity(v), a.end());
        LinComb<K> rhs = evaluate(A, u, outer);
        rhs *= sign_of(before * op_degree(v));
        r.expect(lhs == rhs, to_string(u) + " o_" + std::to_string(i) + " " + to_string(v) + " on (" +
                                 detail::show_inputs(A, a) + "): " + detail::show(A, lhs) + " vs " +
                                 detail::show(A, rhs));
    }
    return r;
}

/// d(u(a)) = (du)(a) + (-1)^{|u|} Σ_i (-1)^{Σ_{j<i}|a_j|} u(.., da_i, ..).
template <class S>
CheckResult check_chain_law(const S& A, const std::vector<typename S::key_type>& pool, int max_arity, int max_degree,
                            int samples, unsigned seed)
{
    using K = typename S::key_type;
    CheckResult r("evaluation is a chain map");
    auto ops = s2_operations(max_arity, max_degree);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    for (int t = 0; t < samples; ++t) {
        const Surj& u = ops[pick(rng)];
        auto a = detail::pick_inputs(A, pool, arity(u), rng);
        LinComb<K> lhs = differential_of(A, evaluate(A, u, a));
        LinComb<K> rhs = evaluate(A, differential(A.ring(), u), a);
        long long before = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto b = a;
            b[i] = differential_of(A, a[i]);
            rhs.add(evaluate(A, u, b), sign_of(op_degree(u) + before));
            before += degree_of(A, a[i]);
        }
        r.expect(lhs == rhs, to_string(u) + " on (" + detail::show_inputs(A, a) + ")");
    }
    return r;
}

/// evaluate(π·u, a) = ε evaluate(u, a_{π(1)}, .., a_{π(r)}), ε the Koszul sign.
template <class S>
CheckResult check_equivariance(const S& A, const std::vector<typename S::key_type>& pool, int max_arity,
                               int max_degree, int samples, unsigned seed)
{
    CheckResult r("equivariance");
    auto ops = s2_operations(max_arity, max_degree);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    for (int t = 0; t < samples; ++t) {
        const Surj& u = ops[pick(rng)];
        std::vector<int> perm(static_cast<std::size_t>(arity(u)));
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = static_cast<int>(i) + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto a = detail::pick_inputs(A, pool, arity(u), rng);
        std::vector<int> degrees, order;
        std::vector<LinComb<typename S::key_type>> b;
        for (auto& x : a)
            degrees.push_back(degree_of(A, x));
        for (int p : perm) {
            b.push_back(a[static_cast<std::size_t>(p - 1)]);
            order.push_back(p - 1);
        }
        auto lhs = evaluate(A, sigma_act(perm, u), a);
        auto rhs = evaluate(A, u, b);
        rhs *= koszul_sign(degrees, order);
        r.expect(lhs == rhs, to_string(u) + " permuted");
    }
    return r;
}

}  // namespace s2cobar
