#pragma once

#include "s2cobar/barcobar/cobar.hpp"
#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"
#include "s2cobar/operad/operad.hpp"
#include "s2cobar/s2/brace_expression.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace s2cobar {

/// True when the first occurrences of the values of u read 1, 2, ..., r.
inline bool is_first_occurrence_ordered(const Surj& u)
{
    int next = 1;
    for (int v : u) {
        if (v == next)
            ++next;
        else if (v > next)
            return false;
    }
    return true;
}

/// Normalized complexity-2 sequences of arity r and degree k.
inline std::vector<Surj> normalized_s2(int r, int k)
{
    std::vector<Surj> out;
    for (auto& u : enumerate_surjections(r, k, 2))
        if (is_first_occurrence_ordered(u))
            out.push_back(u);
    return out;
}

/// Free S2-algebra on Σ⁻¹C̄ (or on the generators admitted by `allowed`).
/// A basis element is a pair (u, (g_1, .., g_r)) with u a complexity-2
/// surjection whose first occurrences are increasing; |[g]| = |g| - 1 and the
/// degree is |u| + Σ|[g_i]|.  The differential is the operad differential plus
/// [g] ↦ -[dg], plus ∂_Δ[g] = (-1)^{|g'|}(1,2)([g'], [g'']) when `with_coproduct`.
template <class C>
class FreeS2 {
public:
    using gen_type = typename C::key_type;
    using word_type = std::vector<gen_type>;
    using key_type = std::pair<Surj, word_type>;

    /// Generators are drawn from C in degrees [min_generator_degree, max_generator_degree].
    FreeS2(C c, int max_generator_degree, bool with_coproduct = true,
           std::function<bool(const gen_type&)> allowed = nullptr, int min_generator_degree = 1)
        : c_(std::move(c)), min_gen_(min_generator_degree), max_gen_(max_generator_degree),
          with_coproduct_(with_coproduct), allowed_(std::move(allowed))
    {
        for (int e = min_gen_; e <= max_gen_; ++e)
            for (auto& g : c_.basis(e))
                if (!c_.is_unit(g) && (!allowed_ || allowed_(g))) {
                    if (e == 1)
                        throw WindowTooNarrow("generator " + c_.label(g) + " has degree 0 after desuspension");
                    gens_.push_back(g);
                }
    }

    const C& coalgebra() const { return c_; }
    const Ring& ring() const { return c_.ring(); }
    const std::vector<gen_type>& generators() const { return gens_; }
    int max_generator_degree() const { return max_gen_; }

    int generator_degree(const gen_type& g) const { return c_.degree(g) - 1; }
    int word_degree(const word_type& w) const
    {
        int d = 0;
        for (const auto& g : w)
            d += generator_degree(g);
        return d;
    }
    int degree(const key_type& k) const { return op_degree(k.first) + word_degree(k.second); }
    key_type unit_key() const { return {}; }
    bool is_unit(const key_type& k) const { return k.first.empty(); }

    /// The generator [g] as the basis element ((1), (g)).
    key_type generator(const gen_type& g) const { return {Surj{1}, word_type{g}}; }

    /// (u, w) rewritten with first occurrences increasing; the sign is the
    /// Koszul sign of the induced permutation of the word.
    std::pair<int, key_type> normal_form(const Surj& u, const word_type& w) const
    {
        const int r = arity(u);
        if (static_cast<int>(w.size()) != r)
            throw ArityMismatch("word of length " + std::to_string(w.size()) + " for " + to_string(u));
        std::vector<int> perm;  // values of u in order of first occurrence
        std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
        for (int v : u)
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                perm.push_back(v);
            }
        std::vector<int> inverse(static_cast<std::size_t>(r) + 1);
        for (std::size_t i = 0; i < perm.size(); ++i)
            inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i) + 1;
        Surj nu(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            nu[i] = inverse[static_cast<std::size_t>(u[i])];
        word_type nw;
        std::vector<int> degrees, order;
        for (const auto& g : w)
            degrees.push_back(generator_degree(g));
        for (int v : perm) {
            nw.push_back(w[static_cast<std::size_t>(v - 1)]);
            order.push_back(v - 1);
        }
        return {koszul_sign(degrees, order), {std::move(nu), std::move(nw)}};
    }

    LinComb<key_type> element(const Surj& u, const word_type& w, const Scalar& c = 1) const
    {
        LinComb<key_type> out(ring());
        auto [s, k] = normal_form(u, w);
        out.add(k, s * c);
        return out;
    }

    LinComb<key_type> element(const OpElem& z, const word_type& w) const
    {
        LinComb<key_type> out(ring());
        for (const auto& [u, c] : z)
            out.add(element(u, w, c));
        return out;
    }

    /// w(x_1, .., x_n) on basis elements, by operadic composition.
    LinComb<key_type> operate(const Surj& w, const std::vector<key_type>& xs) const
    {
        if (static_cast<int>(xs.size()) != arity(w))
            throw ArityMismatch("operation " + to_string(w) + " applied to " + std::to_string(xs.size()) + " inputs");
        // units: delete a value occurring once; otherwise the composite vanishes
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (is_unit(xs[i])) {
                const int v = static_cast<int>(i) + 1;
                if (std::count(w.begin(), w.end(), v) != 1)
                    return LinComb<key_type>(ring());
                Surj rest;
                for (int e : w)
                    if (e != v)
                        rest.push_back(e > v ? e - 1 : e);
                if (rest.empty()) {
                    // all inputs were units
                    return LinComb<key_type>(ring(), unit_key());
                }
                if (is_degenerate(rest))
                    return LinComb<key_type>(ring());
                std::vector<key_type> others(xs.begin(), xs.end());
                others.erase(others.begin() + static_cast<long>(i));
                return operate(rest, others);
            }
        std::vector<OpElem> us;
        word_type word;
        long long parity = 0;
        int before = 0;
        for (const auto& x : xs) {
            parity += static_cast<long long>(op_degree(x.first)) * before;
            before += word_degree(x.second);
            us.push_back(op(ring(), x.first));
            word.insert(word.end(), x.second.begin(), x.second.end());
        }
        OpElem composite = gamma(op(ring(), w), us);
        LinComb<key_type> out = element(composite, word);
        out *= sign_of(parity);
        return out;
    }

    LinComb<key_type> operate(const Surj& w, const std::vector<LinComb<key_type>>& xs) const
    {
        LinComb<key_type> out(ring());
        std::vector<key_type> pick(xs.size());
        auto rec = [&](auto&& self, std::size_t i, const Scalar& c) -> void {
            if (i == xs.size()) {
                out.add(operate(w, pick), c);
                return;
            }
            for (const auto& [k, e] : xs[i]) {
                pick[i] = k;
                self(self, i + 1, c * e);
            }
        };
        rec(rec, 0, 1);
        return out;
    }

    LinComb<key_type> operate(const OpElem& z, const std::vector<LinComb<key_type>>& xs) const
    {
        LinComb<key_type> out(ring());
        for (const auto& [u, c] : z)
            out.add(operate(u, xs), c);
        return out;
    }

    LinComb<key_type> product(const key_type& a, const key_type& b) const { return operate(Surj{1, 2}, {a, b}); }

    LinComb<key_type> brace(const key_type& x, const std::vector<key_type>& ys) const
    {
        if (ys.empty())
            return LinComb<key_type>(ring(), x);
        std::vector<key_type> xs{x};
        xs.insert(xs.end(), ys.begin(), ys.end());
        return operate(brace_generator(static_cast<int>(ys.size())), xs);
    }

    /// Operad differential plus the internal differential of the generators.
    LinComb<key_type> internal_differential(const key_type& k) const
    {
        LinComb<key_type> out(ring());
        if (is_unit(k))
            return out;
        const auto& [u, w] = k;
        out.add(element(s2cobar::differential(ring(), u), w));
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [g, e] : c_.differential(w[i])) {
                if (c_.is_unit(g))
                    throw std::logic_error("differential leaves the augmentation ideal");
                word_type v = w;
                v[i] = g;
                out.add(element(u, v), -sign_of(op_degree(u) + before) * e);
            }
            before += generator_degree(w[i]);
        }
        return out;
    }

    /// ∂_Δ extended as a derivation.
    LinComb<key_type> coproduct_differential(const key_type& k) const
    {
        LinComb<key_type> out(ring());
        if (is_unit(k))
            return out;
        const auto& [u, w] = k;
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            auto cop = c_.reduced_coproduct(w[i]);
            if (!cop.is_zero()) {
                OpElem split = compose(ring(), u, static_cast<int>(i) + 1, Surj{1, 2});
                for (const auto& [pr, e] : cop) {
                    word_type v(w.begin(), w.begin() + static_cast<long>(i));
                    v.push_back(pr.first);
                    v.push_back(pr.second);
                    v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                    LinComb<key_type> t = element(split, v);
                    t *= sign_of(op_degree(u) + before + c_.degree(pr.first)) * e;
                    out.add(t);
                }
            }
            before += generator_degree(w[i]);
        }
        return out;
    }

    LinComb<key_type> differential(const key_type& k) const
    {
        auto out = internal_differential(k);
        if (with_coproduct_)
            out.add(coproduct_differential(k));
        return out;
    }

    /// Normal-form basis elements of the given degree, arity at most max_arity.
    std::vector<key_type> basis(int d, int max_arity = 1 << 20) const
    {
        if (min_gen_ < 1)
            throw std::logic_error("basis enumeration needs positively graded generators");
        std::vector<key_type> out;
        if (d == 0)
            out.push_back(unit_key());
        // a single generator [g] of degree d has |g| = d + 1
        if (d + 1 > max_gen_)
            throw WindowExceeded("free S2 degree " + std::to_string(d) + " needs generators beyond degree " +
                                 std::to_string(max_gen_));
        for (int r = 1; r <= std::min(d, max_arity); ++r)
            for (int k = 0; k + r <= d; ++k) {
                auto ops = normalized_s2(r, k);
                if (ops.empty())
                    continue;
                for (auto& w : words(r, d - k))
                    for (auto& u : ops)
                        out.push_back({u, w});
            }
        return out;
    }

    /// Generator words of length r and total desuspended degree d.
    std::vector<word_type> words(int r, int d) const
    {
        std::vector<word_type> out;
        word_type cur;
        auto rec = [&](auto&& self, int left) -> void {
            if (static_cast<int>(cur.size()) == r) {
                if (left == 0)
                    out.push_back(cur);
                return;
            }
            for (const auto& g : gens_) {
                int e = generator_degree(g);
                if (e > left)
                    continue;
                cur.push_back(g);
                self(self, left - e);
                cur.pop_back();
            }
        };
        rec(rec, d);
        return out;
    }

    std::string label(const key_type& k) const
    {
        if (is_unit(k))
            return "1";
        std::string s = to_string(k.first) + "(";
        for (std::size_t i = 0; i < k.second.size(); ++i)
            s += (i ? ", [" : "[") + c_.label(k.second[i]) + "]";
        return s + ")";
    }

private:
    C c_;
    int min_gen_;
    int max_gen_;
    bool with_coproduct_;
    std::function<bool(const gen_type&)> allowed_;
    std::vector<gen_type> gens_;
};

/// ι : ΩC -> S2(Σ⁻¹C̄), [c_1|..|c_k] ↦ (1,..,k)([c_1], .., [c_k]).
template <class C>
LinComb<typename FreeS2<C>::key_type> iota(const FreeS2<C>& F, const std::vector<typename C::key_type>& w)
{
    if (w.empty())
        return LinComb<typename FreeS2<C>::key_type>(F.ring(), F.unit_key());
    return LinComb<typename FreeS2<C>::key_type>(F.ring(), {product_generator(static_cast<int>(w.size())), w});
}

/// π : S2(Σ⁻¹C̄) -> ΩC, u(g_1, .., g_r) ↦ u([g_1], .., [g_r]) with Kadeishvili's braces.
template <class C>
LinComb<std::vector<typename C::key_type>> pi(const Cobar<C>& omega, const typename FreeS2<C>::key_type& k)
{
    using W = std::vector<typename C::key_type>;
    if (k.first.empty())
        return LinComb<W>(omega.ring(), W{});
    std::vector<LinComb<W>> args;
    for (const auto& g : k.second)
        args.push_back(LinComb<W>(omega.ring(), W{g}));
    return evaluate(omega, k.first, args);
}

template <class C>
LinComb<std::vector<typename C::key_type>> pi(const Cobar<C>& omega, const LinComb<typename FreeS2<C>::key_type>& z)
{
    LinComb<std::vector<typename C::key_type>> out(omega.ring());
    for (const auto& [k, c] : z)
        out.add(pi(omega, k), c);
    return out;
}

}  // namespace s2cobar
