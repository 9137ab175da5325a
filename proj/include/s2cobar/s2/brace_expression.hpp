#pragma once

#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"
#include "s2cobar/operad/operad.hpp"

#include <map>
#include <string>
#include <vector>

namespace s2cobar {

/// Parse tree of a complexity-2 surjection in terms of products and braces.
struct BraceExpression {
    enum class Kind { Leaf, Product, Brace };
    Kind kind = Kind::Leaf;
    int slot = 0;                            // Leaf: input index 1..r
    std::vector<BraceExpression> children;   // Brace: head leaf then arguments

    static BraceExpression leaf(int s) { return {Kind::Leaf, s, {}}; }

    std::string to_string() const
    {
        if (kind == Kind::Leaf)
            return "x" + std::to_string(slot);
        std::string s;
        if (kind == Kind::Product) {
            for (std::size_t i = 0; i < children.size(); ++i)
                s += (i ? "·" : "") + children[i].to_string();
            return "(" + s + ")";
        }
        s = children[0].to_string() + "{";
        for (std::size_t i = 1; i < children.size(); ++i)
            s += (i > 1 ? ", " : "") + children[i].to_string();
        return s + "}";
    }

    /// Leaf slots in traversal order.
    void leaves(std::vector<int>& out) const
    {
        if (kind == Kind::Leaf)
            out.push_back(slot);
        for (const auto& c : children)
            c.leaves(out);
    }
};

namespace detail {

inline BraceExpression parse_segment(const Surj& u, std::size_t l, std::size_t r, const std::map<int, std::size_t>& first,
                                     const std::map<int, std::size_t>& last)
{
    std::vector<BraceExpression> items;
    std::size_t i = l;
    while (i < r) {
        int v = u[i];
        std::size_t f = first.at(v), e = last.at(v);
        if (f != i || e >= r)
            throw NotComplexityTwo("scopes are not laminar in " + to_string(u));
        if (f == e)
            items.push_back(BraceExpression::leaf(v));
        else {
            BraceExpression b;
            b.kind = BraceExpression::Kind::Brace;
            b.children.push_back(BraceExpression::leaf(v));
            std::size_t prev = f;
            for (std::size_t k = f + 1; k <= e; ++k)
                if (u[k] == v) {
                    b.children.push_back(parse_segment(u, prev + 1, k, first, last));
                    prev = k;
                }
            items.push_back(std::move(b));
        }
        i = e + 1;
    }
    if (items.size() == 1)
        return std::move(items.front());
    BraceExpression p;
    p.kind = BraceExpression::Kind::Product;
    p.children = std::move(items);
    return p;
}

}  // namespace detail

/// Products of top-level scopes, braces for repeated values with one argument
/// per gap between consecutive occurrences.
inline BraceExpression parse_sequence(const Surj& u)
{
    if (u.empty())
        throw InvalidValue("empty surjection");
    std::map<int, std::size_t> first, last;
    for (std::size_t i = 0; i < u.size(); ++i) {
        first.try_emplace(u[i], i);
        last[u[i]] = i;
    }
    return detail::parse_segment(u, 0, u.size(), first, last);
}

/// The operad element obtained by composing generators along the tree, with
/// leaves numbered in traversal order.
inline OpElem tree_operation(const Ring& ring, const BraceExpression& t)
{
    if (t.kind == BraceExpression::Kind::Leaf)
        return op(ring, {1});
    std::vector<OpElem> parts;
    for (const auto& c : t.children)
        parts.push_back(tree_operation(ring, c));
    Surj w = t.kind == BraceExpression::Kind::Product ? product_generator(static_cast<int>(parts.size()))
                                                       : brace_generator(static_cast<int>(parts.size()) - 1);
    return gamma(op(ring, w), parts);
}

/// u = sign · π·tree_operation(parse_sequence(u)), where π sends the t-th leaf
/// to its slot.  Returns the sign.
inline int relabel_sign(const Surj& u, const BraceExpression& t)
{
    OpElem w = tree_operation(Ring::integers(), t);
    std::vector<int> slots;
    t.leaves(slots);
    OpElem moved = sigma_act(slots, w);
    if (moved.size() != 1 || moved.begin()->first != u)
        throw std::logic_error("parse tree does not reproduce " + to_string(u));
    return moved.begin()->second == 1 ? 1 : -1;
}

namespace detail {

template <class S>
struct EvalResult {
    LinComb<typename S::key_type> value;
    int op_degree;
    int arg_degree;
};

template <class S>
EvalResult<S> evaluate_tree(const S& A, const BraceExpression& t, const std::vector<LinComb<typename S::key_type>>& args,
                            const std::vector<int>& degrees)
{
    using K = typename S::key_type;
    if (t.kind == BraceExpression::Kind::Leaf) {
        auto i = static_cast<std::size_t>(t.slot - 1);
        return {args[i], 0, degrees[i]};
    }
    std::vector<EvalResult<S>> parts;
    for (const auto& c : t.children)
        parts.push_back(evaluate_tree(A, c, args, degrees));
    long long parity = 0;
    int opd = t.kind == BraceExpression::Kind::Brace ? static_cast<int>(parts.size()) - 1 : 0;
    int argd = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            parity += static_cast<long long>(parts[j].op_degree) * parts[i].arg_degree;
        opd += parts[j].op_degree;
        argd += parts[j].arg_degree;
    }
    LinComb<K> value(A.ring());
    if (t.kind == BraceExpression::Kind::Product) {
        std::vector<LinComb<K>> xs;
        for (auto& p : parts)
            xs.push_back(p.value);
        value = multiply_all(A, xs);
    }
    else {
        std::vector<LinComb<K>> ys;
        for (std::size_t i = 1; i < parts.size(); ++i)
            ys.push_back(parts[i].value);
        value = brace_of(A, parts[0].value, ys);
    }
    value *= sign_of(parity);
    return {value, opd, argd};
}

}  // namespace detail

/// u(a_1, ..., a_r) in an S2-algebra, for homogeneous inputs.
template <class S>
LinComb<typename S::key_type> evaluate(const S& A, const Surj& u, const std::vector<LinComb<typename S::key_type>>& args)
{
    if (static_cast<int>(args.size()) != arity(u))
        throw ArityMismatch("surjection " + to_string(u) + " has arity " + std::to_string(arity(u)) + " but got " +
                            std::to_string(args.size()) + " inputs");
    BraceExpression t = parse_sequence(u);
    int c = relabel_sign(u, t);
    std::vector<int> degrees;
    for (const auto& a : args)
        degrees.push_back(degree_of(A, a));
    std::vector<int> slots;
    t.leaves(slots);
    std::vector<int> perm;
    for (int s : slots)
        perm.push_back(s - 1);
    auto r = detail::evaluate_tree(A, t, args, degrees);
    r.value *= c * koszul_sign(degrees, perm);
    return r.value;
}

template <class S>
LinComb<typename S::key_type> evaluate(const S& A, const OpElem& z, const std::vector<LinComb<typename S::key_type>>& args)
{
    LinComb<typename S::key_type> out(A.ring());
    for (const auto& [u, c] : z)
        out.add(evaluate(A, u, args), c);
    return out;
}

}  // namespace s2cobar
