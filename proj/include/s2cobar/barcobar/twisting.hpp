#pragma once

#include "s2cobar/algebra/axioms.hpp"
#include "s2cobar/algebra/tensor_hopf.hpp"
#include "s2cobar/barcobar/bar.hpp"
#include "s2cobar/barcobar/cobar.hpp"
#include "s2cobar/core/chain_complex.hpp"
#include "s2cobar/core/homology.hpp"
#include "s2cobar/s2/identities.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace s2cobar {

/// A linear map given on basis keys.
template <class KS, class KT>
using KeyMap = std::function<LinComb<KT>(const KS&)>;

template <class KS, class KT>
LinComb<KT> apply_map(const Ring& ring, const KeyMap<KS, KT>& f, const LinComb<KS>& x)
{
    LinComb<KT> out(ring);
    for (const auto& [k, c] : x)
        out.add(f(k), c);
    return out;
}

/// d f + f d = m (f ⊗ f) Δ̄ on augmentation basis elements of C in degrees [lo, hi];
/// f is taken to vanish on the unit.
template <class C, class A>
CheckResult is_twisting(const C& c, const A& a, const KeyMap<typename C::key_type, typename A::key_type>& f, int lo,
                        int hi)
{
    using KC = typename C::key_type;
    using KA = typename A::key_type;
    CheckResult r("twisting morphism equation");
    auto fz = [&](const KC& k) { return c.is_unit(k) ? LinComb<KA>(a.ring()) : f(k); };
    for (auto& x : detail::augmentation_basis(c, lo, hi)) {
        LinComb<KA> lhs = differential_of(a, f(x));
        for (const auto& [k, e] : c.differential(x))
            lhs.add(fz(k), e);
        LinComb<KA> rhs(a.ring());
        for (const auto& [pr, e] : c.reduced_coproduct(x))
            rhs.add(multiply(a, fz(pr.first), fz(pr.second)), sign_of(c.degree(pr.first)) * e);
        r.expect(lhs == rhs, "degree " + std::to_string(c.degree(x)) + " at " + c.label(x));
    }
    return r;
}

template <class C, class A>
void require_twisting(const C& c, const A& a, const KeyMap<typename C::key_type, typename A::key_type>& f, int lo,
                      int hi)
{
    auto r = is_twisting(c, a, f, lo, hi);
    if (!r.ok())
        throw NotATwistingMorphism(r.failures.front());
}

/// C -> BA, c ↦ Σ_k [f(c^(1))|..|f(c^(k))] over the iterated reduced diagonals.
template <class C, class A>
KeyMap<typename C::key_type, std::vector<typename A::key_type>>
coalgebra_map_from_twisting(const C& c, const A& a, KeyMap<typename C::key_type, typename A::key_type> f)
{
    using KC = typename C::key_type;
    using KA = typename A::key_type;
    return [c, a, f](const KC& x) {
        LinComb<std::vector<KA>> out(c.ring());
        if (c.is_unit(x)) {
            out.add(std::vector<KA>{}, 1);
            return out;
        }
        for (const auto& diag : all_reduced_diagonals(c, x))
            for (const auto& [parts, e] : diag) {
                std::vector<LinComb<KA>> letters;
                for (const auto& p : parts)
                    letters.push_back(f(p));
                for (const auto& [w, g] : expand_words(c.ring(), letters)) {
                    for (const auto& l : w)
                        if (a.is_unit(l))
                            throw NotATwistingMorphism("twisting morphism hits the unit at " + c.label(parts.front()));
                    out.add(w, e * g);
                }
            }
        return out;
    };
}

/// ΩC -> A, [c_1|..|c_k] ↦ f(c_1)..f(c_k).
template <class C, class A>
KeyMap<std::vector<typename C::key_type>, typename A::key_type>
algebra_map_from_twisting(const A& a, KeyMap<typename C::key_type, typename A::key_type> f)
{
    using KC = typename C::key_type;
    using KA = typename A::key_type;
    return [a, f](const std::vector<KC>& w) {
        std::vector<LinComb<KA>> xs;
        for (const auto& c : w)
            xs.push_back(f(c));
        return multiply_all(a, xs);
    };
}

/// The twisting morphism of a coalgebra map C -> BA: its word-length-one part.
template <class KC, class KA>
KeyMap<KC, KA> twisting_of_coalgebra_map(const Ring& ring, KeyMap<KC, std::vector<KA>> F)
{
    return [ring, F](const KC& x) {
        LinComb<KA> out(ring);
        for (const auto& [w, e] : F(x))
            if (w.size() == 1)
                out.add(w.front(), e);
        return out;
    };
}

/// The twisting morphism of an algebra map ΩC -> A: c ↦ G([c]).
template <class KC, class KA>
KeyMap<KC, KA> twisting_of_algebra_map(KeyMap<std::vector<KC>, KA> G)
{
    return [G](const KC& c) { return G({c}); };
}

/// d F = F d on basis elements of degrees [lo, hi] (F of degree 0).
template <class S, class T>
CheckResult check_chain_map(const S& s, const T& t, const KeyMap<typename S::key_type, typename T::key_type>& F,
                            int lo, int hi)
{
    CheckResult r("chain map");
    for (auto& x : detail::basis_range(s, lo, hi)) {
        auto lhs = differential_of(t, F(x));
        auto rhs = apply_map(t.ring(), F, s.differential(x));
        r.expect(lhs == rhs, s.label(x));
    }
    return r;
}

/// Δ̄ F = (F ⊗ F) Δ̄ on augmentation basis elements (F of degree 0, counital).
template <class S, class T>
CheckResult check_coalgebra_map(const S& s, const T& t, const KeyMap<typename S::key_type, typename T::key_type>& F,
                                int lo, int hi)
{
    using KT = typename T::key_type;
    CheckResult r("coalgebra map");
    for (auto& x : detail::augmentation_basis(s, lo, hi)) {
        auto Fx = F(x);
        PairComb<KT> lhs(t.ring());
        for (const auto& [k, e] : Fx) {
            if (t.is_unit(k)) {
                r.fail("unit term in the image of " + s.label(x));
                continue;
            }
            for (const auto& [pr, f] : t.reduced_coproduct(k))
                lhs.add(pr, e * f);
        }
        PairComb<KT> rhs(t.ring());
        for (const auto& [pr, e] : s.reduced_coproduct(x))
            for (const auto& [k1, f1] : F(pr.first))
                for (const auto& [k2, f2] : F(pr.second))
                    rhs.add({k1, k2}, e * f1 * f2);
        r.expect(lhs == rhs, s.label(x));
    }
    return r;
}

/// F(ab) = F(a)F(b) on pairs of basis elements with total degree in [lo, hi], and F(1) = 1.
template <class S, class T>
CheckResult check_algebra_map(const S& s, const T& t, const KeyMap<typename S::key_type, typename T::key_type>& F,
                              int lo, int hi)
{
    CheckResult r("algebra map");
    r.expect(F(s.unit_key()) == unit_element(t), "unit");
    auto B = detail::augmentation_basis(s, lo, hi);
    for (auto& a : B)
        for (auto& b : B) {
            int d = s.degree(a) + s.degree(b);
            if (d < lo || d > hi)
                continue;
            auto lhs = apply_map(t.ring(), F, s.product(a, b));
            auto rhs = multiply(t, F(a), F(b));
            r.expect(lhs == rhs, s.label(a) + "·" + s.label(b));
        }
    return r;
}

/// Hopf condition f(c_1c_2) = Σ_k (-1)^α f(c_1){f(c̄_2^(1)), .., f(c̄_2^(k))},
/// α = k(|c_1|-1) + Σ_i (k-i)(|c̄_2^(i)|-1), on pairs of augmentation basis elements.
template <class C, class A>
CheckResult is_hopf_twisting(const C& c, const A& a, const KeyMap<typename C::key_type, typename A::key_type>& f,
                             int lo, int hi)
{
    using KA = typename A::key_type;
    CheckResult r("Hopf twisting condition");
    auto B = detail::augmentation_basis(c, lo, hi);
    for (auto& c1 : B)
        for (auto& c2 : B) {
            int d = c.degree(c1) + c.degree(c2);
            if (d < lo || d > hi)
                continue;
            LinComb<KA> lhs(a.ring());
            for (const auto& [k, e] : c.product(c1, c2))
                if (!c.is_unit(k))
                    lhs.add(f(k), e);
            LinComb<KA> rhs(a.ring());
            auto head = f(c1);
            for (const auto& diag : all_reduced_diagonals(c, c2))
                for (const auto& [parts, e] : diag) {
                    const long long k = static_cast<long long>(parts.size());
                    long long alpha = k * (c.degree(c1) - 1);
                    std::vector<LinComb<KA>> args;
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        alpha += (k - 1 - static_cast<long long>(i)) * (c.degree(parts[i]) - 1);
                        args.push_back(f(parts[i]));
                    }
                    rhs.add(brace_of(a, head, args), sign_of(alpha) * e);
                }
            r.expect(lhs == rhs, c.label(c1) + " · " + c.label(c2));
        }
    return r;
}

/// The unique Hopf twisting morphism TV -> A extending f0 on generators, for
/// TV primitively generated with zero differential.
template <class A>
KeyMap<std::vector<int>, typename A::key_type>
extend_hopf_twisting_free(const TensorHopf& T, const A& a, std::function<LinComb<typename A::key_type>(int)> f0)
{
    using KA = typename A::key_type;
    using Word = std::vector<int>;
    if (!T.is_primitively_generated() || !T.has_zero_differential())
        throw NotPrimitivelyGenerated("free extension needs a primitively generated tensor algebra with d = 0");
    auto memo = std::make_shared<std::map<Word, LinComb<KA>>>();
    auto self = std::make_shared<std::function<LinComb<KA>(const Word&)>>();
    std::weak_ptr<std::function<LinComb<KA>(const Word&)>> weak = self;
    *self = [T, a, f0, memo, weak](const Word& w) -> LinComb<KA> {
        if (w.empty())
            return LinComb<KA>(a.ring());
        if (auto it = memo->find(w); it != memo->end())
            return it->second;
        auto rec = weak.lock();
        LinComb<KA> out(a.ring());
        if (w.size() == 1) {
            out = f0(w.front());
        } else {
            const int g = w.front();
            const Word rest(w.begin() + 1, w.end());
            auto head = f0(g);
            const int dg = T.generator(g).degree;
            for (const auto& diag : all_reduced_diagonals(T, rest))
                for (const auto& [parts, e] : diag) {
                    const long long k = static_cast<long long>(parts.size());
                    long long alpha = k * (dg - 1);
                    std::vector<LinComb<KA>> args;
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        alpha += (k - 1 - static_cast<long long>(i)) * (T.degree(parts[i]) - 1);
                        args.push_back((*rec)(parts[i]));
                    }
                    out.add(brace_of(a, head, args), sign_of(alpha) * e);
                }
        }
        memo->emplace(w, out);
        return out;
    };
    return [self](const Word& w) { return (*self)(w); };
}

/// Universal twisting morphism C -> ΩC, c ↦ [c].
template <class C>
KeyMap<typename C::key_type, std::vector<typename C::key_type>> universal_twisting(const C& c)
{
    using KC = typename C::key_type;
    return [c](const KC& x) {
        LinComb<std::vector<KC>> out(c.ring());
        if (!c.is_unit(x))
            out.add({x}, 1);
        return out;
    };
}

/// Projection BA -> A, [a] ↦ a, zero on other word lengths.
template <class A>
KeyMap<std::vector<typename A::key_type>, typename A::key_type> bar_projection(const A& a)
{
    using KA = typename A::key_type;
    return [a](const std::vector<KA>& w) {
        LinComb<KA> out(a.ring());
        if (w.size() == 1)
            out.add(w.front(), 1);
        return out;
    };
}

/// Whether F : S -> T induces an isomorphism on homology in degrees [lo, hi].
/// With bounded_below, S and T must vanish below lo and both complexes are
/// built on [lo - 1, hi + 2]; otherwise they are built on [lo - 2, hi + 2].
template <class S, class T>
bool is_homology_iso(const S& s, const T& t, const KeyMap<typename S::key_type, typename T::key_type>& F, int lo,
                     int hi, bool bounded_below = true)
{
    using KS = typename S::key_type;
    using KT = typename T::key_type;
    const int bottom = bounded_below ? lo - 1 : lo - 2;
    auto X = build_complex<KS>(
        s.ring(), bottom, hi + 2, [&](int d) { return s.basis(d); }, [&](const KS& k) { return s.differential(k); },
        [&](const KS& k) { return s.label(k); }, bounded_below, false);
    auto Y = build_complex<KT>(
        t.ring(), bottom, hi + 2, [&](int d) { return t.basis(d); }, [&](const KT& k) { return t.differential(k); },
        [&](const KT& k) { return t.label(k); }, bounded_below, false);
    auto f = build_map(X, Y, 0, F);
    if (!chain_map_failures(X.complex, Y.complex, f).empty())
        return false;
    return is_quasi_isomorphism(X.complex, Y.complex, f, lo, hi);
}

/// C -> BΩC from the universal twisting morphism: a Hopf map and a homology
/// isomorphism on degrees [0, hi].
template <class C>
CheckResult check_unit_map(const C& c, int hi, const WordWindow& cobar_window, const WordWindow& bar_window)
{
    using OC = Cobar<C>;
    using BOC = Bar<OC>;
    OC omega(c, cobar_window);
    BOC b(omega, bar_window);
    auto F = coalgebra_map_from_twisting(c, omega, universal_twisting(c));
    CheckResult r("unit map C -> BΩC");
    r.absorb(check_chain_map<C, BOC>(c, b, F, 0, hi));
    r.absorb(check_coalgebra_map<C, BOC>(c, b, F, 0, hi));
    r.absorb(check_algebra_map<C, BOC>(c, b, F, 0, hi));
    r.expect(is_homology_iso<C, BOC>(c, b, F, 0, hi), "homology isomorphism through degree " + std::to_string(hi));
    return r;
}

/// A triple with x{y, z} ≠ 0 in A; throws NoWitness if none is found in the pool.
template <class A>
std::array<typename A::key_type, 3> find_two_brace_witness(const A& a, const std::vector<typename A::key_type>& pool)
{
    for (auto& x : pool)
        for (auto& y : pool)
            for (auto& z : pool)
                if (!a.brace(x, {y, z}).is_zero())
                    return {x, y, z};
    throw NoWitness("every two-argument brace vanishes on the sampled basis");
}

/// The counit ΩBA -> A is an algebra map but does not preserve braces:
/// [[x]]{[[y]], [[z]]} = 0 in ΩBA while x{y, z} may be nonzero.  Passing means
/// such a discrepancy was certified; without a witness the check is skipped.
template <class A>
CheckResult counit_negative_test(const A& a, const std::vector<typename A::key_type>& pool,
                                 const WordWindow& bar_window, const WordWindow& cobar_window)
{
    using KA = typename A::key_type;
    using BA = Bar<A>;
    using OBA = Cobar<BA>;
    CheckResult r("counit ΩBA -> A is not an S2-map");
    std::array<KA, 3> w;
    try {
        w = find_two_brace_witness(a, pool);
    } catch (const NoWitness& e) {
        r.skipped = true;
        r.notes.push_back(e.what());
        return r;
    }
    BA b(a, bar_window);
    OBA ob(b, cobar_window);
    auto counit = algebra_map_from_twisting<BA, A>(a, bar_projection(a));
    auto lift = [](const KA& k) { return std::vector<std::vector<KA>>{std::vector<KA>{k}}; };
    auto image = apply_map<std::vector<std::vector<KA>>, KA>(a.ring(), counit,
                                                               ob.brace(lift(w[0]), {lift(w[1]), lift(w[2])}));
    auto target = a.brace(w[0], {w[1], w[2]});
    r.expect(image != target, "counit preserved the brace");
    r.notes.push_back("x = " + a.label(w[0]) + ", y = " + a.label(w[1]) + ", z = " + a.label(w[2]) +
                      ": image of [[x]]{[[y]],[[z]]} is " + detail::show(a, image) + ", x{y,z} = " +
                      detail::show(a, target));
    return r;
}

}  // namespace s2cobar
