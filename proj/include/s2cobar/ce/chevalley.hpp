#pragma once

#include "s2cobar/algebra/small_algebras.hpp"
#include "s2cobar/barcobar/bar.hpp"
#include "s2cobar/barcobar/cobar.hpp"
#include "s2cobar/barcobar/dual.hpp"
#include "s2cobar/barcobar/twisting.hpp"
#include "s2cobar/ce/lie.hpp"
#include "s2cobar/core/homology.hpp"
#include "s2cobar/tilde/ideal.hpp"

namespace s2cobar {

/// Chevalley-Eilenberg chains C_*(L): graded-symmetric words Σx_{i_1}∧..∧Σx_{i_k}
/// with |Σx| = |x| + 1, keyed by nondecreasing index lists.  The coproduct is
/// the positional unshuffle coproduct and the differential is the coderivation
/// with d(Σx) = -Σdx and d(Σa∧Σb) = (-1)^{|a|+1}Σ[a, b].
class CEChains {
public:
    using key_type = std::vector<int>;

    explicit CEChains(GradedLie L) : L_(std::move(L))
    {
        if (!L_.ring().has_half())
            throw RingError("Chevalley-Eilenberg chains need 1/2; " + L_.ring().name() + " does not have it");
        if (L_.ring().kind() == Ring::Kind::IntegersMod)
            for (int i = 0; i < L_.size(); ++i)
                if (L_.degree(i) % 2 != 0)
                    throw RingError("symmetric powers of " + L_.name(i) + " need divided powers over " +
                                    L_.ring().name());
        L_.require_valid();
    }

    const GradedLie& lie() const { return L_; }
    const Ring& ring() const { return L_.ring(); }
    int letter_degree(int i) const { return L_.degree(i) + 1; }
    int degree(const key_type& w) const
    {
        int d = 0;
        for (int i : w)
            d += letter_degree(i);
        return d;
    }
    key_type unit_key() const { return {}; }
    bool is_unit(const key_type& w) const { return w.empty(); }
    std::vector<key_type> basis(int d) const
    {
        return graded_monomials([this](int i) { return letter_degree(i); }, L_.size(), d);
    }
    std::string label(const key_type& w) const
    {
        if (w.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += (i ? "^s" : "s") + L_.name(w[i]);
        return s;
    }

    /// Sorted form of an arbitrary list of letters, with its Koszul sign.
    LinComb<key_type> wedge(key_type w) const
    {
        const int s = sort_graded(w, [this](int i) { return letter_degree(i); });
        LinComb<key_type> out(ring());
        if (s != 0)
            out.add(w, s);
        return out;
    }

    LinComb<key_type> differential(const key_type& w) const
    {
        LinComb<key_type> out(ring());
        const std::size_t k = w.size();
        // one letter moved to the front
        int before = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const int s = sign_of(static_cast<long long>(letter_degree(w[i])) * before);
            key_type rest = w;
            rest.erase(rest.begin() + static_cast<long>(i));
            for (const auto& [m, c] : L_.differential(w[i])) {
                key_type v{m};
                v.insert(v.end(), rest.begin(), rest.end());
                out.add(wedge(v), -s * c);
            }
            before += letter_degree(w[i]);
        }
        // two letters moved to the front
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                long long parity = 0;
                for (std::size_t t = 0; t < i; ++t)
                    parity += static_cast<long long>(letter_degree(w[i])) * letter_degree(w[t]);
                for (std::size_t t = 0; t < j; ++t)
                    if (t != i)
                        parity += static_cast<long long>(letter_degree(w[j])) * letter_degree(w[t]);
                key_type rest;
                for (std::size_t t = 0; t < k; ++t)
                    if (t != i && t != j)
                        rest.push_back(w[t]);
                const int a = w[i];
                const int s = sign_of(parity + L_.degree(a) + 1);
                for (const auto& [m, c] : L_.bracket(a, w[j])) {
                    key_type v{m};
                    v.insert(v.end(), rest.begin(), rest.end());
                    out.add(wedge(v), s * c);
                }
            }
        return out;
    }

    PairComb<key_type> reduced_coproduct(const key_type& w) const
    {
        PairComb<key_type> out(ring());
        const std::size_t k = w.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            key_type left, right;
            long long parity = 0;
            int right_degree = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1) {
                    parity += static_cast<long long>(letter_degree(w[i])) * right_degree;
                    left.push_back(w[i]);
                } else {
                    right.push_back(w[i]);
                    right_degree += letter_degree(w[i]);
                }
            }
            out.add({left, right}, sign_of(parity));
        }
        return out;
    }

private:
    GradedLie L_;
};

/// C*(L) = C_*(L)^∨, graded commutative, with vanishing braces.
using CECochains = TrivialBraces<Dual<CEChains>>;

inline CECochains ce_cochains(const GradedLie& L) { return CECochains(Dual<CEChains>(CEChains(L))); }

/// C_*(L) -> BUL, Σx_1∧..∧Σx_k ↦ Σ_σ ±[x_σ(1)|..|x_σ(k)] (Koszul signs in the
/// suspended degrees, summed over all position permutations).
inline KeyMap<std::vector<int>, std::vector<std::vector<int>>> ce_inclusion(const CEChains& ce)
{
    return [ce](const std::vector<int>& w) {
        using Words = std::vector<std::vector<int>>;
        LinComb<Words> out(ce.ring());
        std::vector<int> order(w.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> degrees;
        for (int i : w)
            degrees.push_back(ce.letter_degree(i));
        do {
            Words v;
            for (int o : order)
                v.push_back({w[static_cast<std::size_t>(o)]});
            out.add(v, koszul_sign(degrees, order));
        } while (std::next_permutation(order.begin(), order.end()));
        return out;
    };
}

/// The twisting morphism C_*(L) -> L -> UL, Σx ↦ x.
inline KeyMap<std::vector<int>, std::vector<int>> ce_twisting(const CEChains& ce)
{
    return [ring = ce.ring()](const std::vector<int>& w) {
        LinComb<std::vector<int>> out(ring);
        if (w.size() == 1)
            out.add(w, 1);
        return out;
    };
}

/// α : (UL)^∨ -> C*(L), the transpose of Σx ↦ x: ξ* ↦ (Σξ)* and every
/// longer PBW monomial dual ↦ 0.
inline KeyMap<std::vector<int>, std::vector<int>> ce_alpha(const GradedLie& L)
{
    return [ring = L.ring()](const std::vector<int>& m) {
        LinComb<std::vector<int>> out(ring);
        if (m.size() == 1)
            out.add(m, 1);
        return out;
    };
}

struct CEBounds {
    int cutoff = 8;       // cohomological degrees -cutoff..0 on the cochain side
    int max_length = 8;   // cobar/bar word length bound
};

/// Betti numbers of a negatively graded structure in degrees [-cutoff, 0].
template <class S>
std::map<int, std::size_t> betti_numbers(const S& s, int cutoff)
{
    using K = typename S::key_type;
    auto X = build_complex<K>(
        s.ring(), -cutoff - 1, 1, [&](int d) { return s.basis(d); }, [&](const K& k) { return s.differential(k); },
        [&](const K& k) { return s.label(k); }, false, false);
    auto h = homology(X.complex, -cutoff, 0);
    std::map<int, std::size_t> out;
    for (const auto& [d, g] : h.groups)
        out[d] = g.betti;
    return out;
}

/// The checks of the Chevalley-Eilenberg comparison for one Lie algebra.
inline std::vector<CheckResult> compare_ce(const GradedLie& L, const CEBounds& b)
{
    const int hi = b.cutoff;
    Enveloping U(L);
    CEChains ce(L);
    auto star = ce_cochains(L);
    Dual<Enveloping> Ud(U);
    const WordWindow window{1, hi + 1, b.max_length};
    Bar<Enveloping> BU(U, window);
    Cobar<Dual<Enveloping>> OU(Ud, {-hi - 1, -1, b.max_length});

    CheckResult pbw("PBW straightening");
    pbw.absorb(U.check_straightening(std::min(hi, 8)));
    for (int d = 0; d <= hi; ++d)
        for (auto& w : U.basis(d)) {
            auto cop = full_coproduct(U, w);
            pbw.expect(cop.coefficient({w, U.unit_key()}) == 1 && cop.coefficient({U.unit_key(), w}) == 1,
                       "counit fails on " + U.label(w));
        }

    CheckResult inclusion("C_*(L) -> BUL");
    auto inc = ce_inclusion(ce);
    inclusion.absorb(check_chain_map<CEChains, Bar<Enveloping>>(ce, BU, inc, 0, hi));
    inclusion.absorb(check_coalgebra_map<CEChains, Bar<Enveloping>>(ce, BU, inc, 0, hi));
    inclusion.expect(is_homology_iso<CEChains, Bar<Enveloping>>(ce, BU, inc, 0, hi),
                     "inclusion is not a homology isomorphism through degree " + std::to_string(hi));

    CheckResult cocomm("C_*(L) cocommutative");
    for (int d = 0; d <= hi; ++d)
        for (auto& w : ce.basis(d)) {
            auto cop = ce.reduced_coproduct(w);
            PairComb<std::vector<int>> flipped(ce.ring());
            for (const auto& [pr, c] : cop)
                flipped.add({pr.second, pr.first},
                            sign_of(static_cast<long long>(ce.degree(pr.first)) * ce.degree(pr.second)) * c);
            cocomm.expect(cop == flipped, ce.label(w));
        }

    CheckResult twisting("alpha twisting");
    auto alpha = ce_alpha(L);
    twisting.absorb(is_twisting(ce, U, ce_twisting(ce), 0, hi));
    twisting.absorb(is_twisting(Ud, star, alpha, -hi, 0));
    CheckResult hopf("alpha Hopf twisting");
    hopf.absorb(is_hopf_twisting(Ud, star, alpha, -hi, 0));

    CheckResult quasi("Omega(UL)^v -> C*(L)");
    auto G = algebra_map_from_twisting<Dual<Enveloping>, CECochains>(star, alpha);
    quasi.absorb(check_chain_map<Cobar<Dual<Enveloping>>, CECochains>(OU, star, G, -hi, 0));
    quasi.absorb(check_algebra_map<Cobar<Dual<Enveloping>>, CECochains>(OU, star, G, -hi, 0));
    quasi.expect(is_homology_iso<Cobar<Dual<Enveloping>>, CECochains>(OU, star, G, -hi, 0, false),
                 "not a homology isomorphism in degrees -" + std::to_string(hi) + "..0");
    auto bo = betti_numbers(OU, hi);
    auto bc = betti_numbers(star, hi);
    std::string table;
    for (const auto& [d, n] : bc)
        if (n || bo[d])
            table += (table.empty() ? "" : ", ") + std::to_string(d) + ":" + std::to_string(bo[d]) + "/" +
                     std::to_string(n);
    quasi.expect(bo == bc, "betti numbers differ: " + table);
    quasi.notes.push_back("betti (degree:cobar/CE) " + (table.empty() ? std::string("all zero") : table));

    // the S2-map Ω̃(UL)^∨ -> C*(L) induced by α: well defined on I and a chain map
    CheckResult tilde("tilde map is an S2 chain map");
    using F2 = FreeS2<Dual<Enveloping>>;
    F2 F(Ud, -2, true, nullptr, -hi);
    auto phi = [&](const F2::key_type& k) {
        if (F.is_unit(k))
            return LinComb<std::vector<int>>(L.ring(), star.unit_key());
        std::vector<LinComb<std::vector<int>>> args;
        for (const auto& c : k.second)
            args.push_back(alpha(c));
        return evaluate(star, k.first, args);
    };
    auto phi_all = [&](const LinComb<F2::key_type>& z) {
        LinComb<std::vector<int>> out(L.ring());
        for (const auto& [k, c] : z)
            out.add(phi(k), c);
        return out;
    };
    const auto& gens = F.generators();
    for (const auto& c1 : gens)
        for (const auto& c2 : gens)
            if (Ud.degree(c1) + Ud.degree(c2) >= -hi) {
                auto g = ideal_generator(F, c1, c2);
                tilde.expect(phi_all(g).is_zero(), "g(" + Ud.label(c1) + ", " + Ud.label(c2) + ") is not killed");
            }
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k <= 2; ++k)
            for (const auto& u : normalized_s2(r, k)) {
                std::vector<F2::gen_type> word;
                auto rec = [&](auto&& self, int left) -> void {
                    if (static_cast<int>(word.size()) == r) {
                        const F2::key_type x{u, word};
                        tilde.expect(phi_all(F.differential(x)) == differential_of(star, phi(x)), F.label(x));
                        return;
                    }
                    for (const auto& c : gens)
                        if (F.generator_degree(c) >= left) {
                            word.push_back(c);
                            self(self, left - F.generator_degree(c));
                            word.pop_back();
                        }
                };
                rec(rec, -hi - k);
            }
    return {pbw, inclusion, cocomm, twisting, hopf, quasi, tilde};
}

}  // namespace s2cobar
