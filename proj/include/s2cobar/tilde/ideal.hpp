#pragma once

#include "s2cobar/core/matrix.hpp"
#include "s2cobar/core/report.hpp"
#include "s2cobar/tilde/free_s2.hpp"

#include <map>

namespace s2cobar {

/// g(c_1, c_2) = [c_1 c_2] - Σ (-1)^α [c_1]{[c̄_2^(1)], .., [c̄_2^(k)]},
/// α = k(|c_1| - 1) + Σ_i (k - i)(|c̄_2^(i)| - 1).
template <class C>
LinComb<typename FreeS2<C>::key_type> ideal_generator(const FreeS2<C>& F, const typename C::key_type& c1,
                                                      const typename C::key_type& c2)
{
    using K = typename FreeS2<C>::key_type;
    const C& c = F.coalgebra();
    LinComb<K> out(F.ring());
    for (const auto& [m, e] : c.product(c1, c2))
        out.add(F.generator(m), e);
    const long long d1 = c.degree(c1) - 1;
    for (const auto& diag : all_reduced_diagonals(c, c2))
        for (const auto& [parts, e] : diag) {
            const long long k = static_cast<long long>(parts.size());
            long long alpha = k * d1;
            std::vector<K> ys;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                alpha += (k - 1 - static_cast<long long>(i)) * (c.degree(parts[i]) - 1);
                ys.push_back(F.generator(parts[i]));
            }
            out.add(F.brace(F.generator(c1), ys), -sign_of(alpha) * e);
        }
    return out;
}

/// The ideal I in one degree: a spanning set of composites u(g(c_1,c_2), [c], ..)
/// and its reduction data (echelon form over a field, Hermite rows over Z).
template <class C>
struct IdealWitness {
    using key_type = typename FreeS2<C>::key_type;
    int degree = 0;
    std::vector<LinComb<key_type>> elements;
    std::vector<std::string> origins;
    std::vector<key_type> basis;
    std::map<key_type, std::size_t> index;
    SubmoduleReducer reducer;

    IdealWitness(const Ring& ring, std::size_t dim) : reducer(ring, dim) {}

    std::vector<Scalar> coordinates(const LinComb<key_type>& z) const
    {
        std::vector<Scalar> v(basis.size(), Scalar(0));
        for (const auto& [k, c] : z) {
            auto it = index.find(k);
            if (it == index.end())
                throw std::logic_error("element " + to_string(k.first) + " outside the enumerated degree-" + std::to_string(degree) + " basis");
            v[it->second] = c;
        }
        return v;
    }

    bool contains(const LinComb<key_type>& z) const { return reducer.contains(coordinates(z)); }
};

template <class C>
IdealWitness<C> ideal_span(const FreeS2<C>& F, int d)
{
    using K = typename FreeS2<C>::key_type;
    const C& c = F.coalgebra();
    auto basis = F.basis(d);
    IdealWitness<C> w(F.ring(), basis.size());
    w.degree = d;
    w.basis = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
        w.index[basis[i]] = i;
    const auto& gens = F.generators();
    for (const auto& c1 : gens)
        for (const auto& c2 : gens) {
            const int dg = c.degree(c1) + c.degree(c2) - 1;
            if (dg > d)
                continue;
            if (c.degree(c1) + c.degree(c2) > F.max_generator_degree())
                throw WindowExceeded("ideal generator needs [c1 c2] beyond the generator window");
            auto g = ideal_generator(F, c1, c2);
            if (g.is_zero())
                continue;
            const std::string name = "g(" + c.label(c1) + ", " + c.label(c2) + ")";
            // u(g, [c_2], .., [c_n]) for every u ∈ S2(n) and generator word
            for (int n = 1; n + dg - 1 <= d; ++n)
                for (int k = 0; k + dg + (n - 1) <= d; ++k) {
                    auto ops = enumerate_surjections(n, k, 2);
                    if (ops.empty())
                        continue;
                    for (auto& rest : F.words(n - 1, d - dg - k)) {
                        std::vector<LinComb<K>> args{g};
                        for (const auto& r : rest)
                            args.push_back(LinComb<K>(F.ring(), F.generator(r)));
                        for (auto& u : ops) {
                            auto z = F.operate(u, args);
                            if (z.is_zero())
                                continue;
                            w.reducer.insert(w.coordinates(z));
                            w.elements.push_back(std::move(z));
                            w.origins.push_back(to_string(u) + " applied to " + name);
                        }
                    }
                }
        }
    return w;
}

/// z_1 = z_2 in Ω̃C.
template <class C>
bool quotient_eq(const LinComb<typename FreeS2<C>::key_type>& z1, const LinComb<typename FreeS2<C>::key_type>& z2,
                 const IdealWitness<C>& w)
{
    auto z = z1;
    z.add(z2, -1);
    return w.contains(z);
}

/// ∂(I_d) ⊆ I_{d-1} and π(I_d) = 0 for d in [lo, hi].
template <class C>
std::vector<CheckResult> check_ideal(const FreeS2<C>& F, const Cobar<C>& omega, int lo, int hi)
{
    CheckResult stable("dI in I"), killed("pi(I)=0");
    std::map<int, IdealWitness<C>> spans;
    auto span = [&](int d) -> const IdealWitness<C>& {
        auto it = spans.find(d);
        if (it == spans.end())
            it = spans.emplace(d, ideal_span(F, d)).first;
        return it->second;
    };
    for (int d = lo; d <= hi; ++d) {
        const auto& I = span(d);
        for (std::size_t i = 0; i < I.elements.size(); ++i) {
            const auto& z = I.elements[i];
            auto dz = differential_of(F, z);
            stable.expect(dz.is_zero() || span(d - 1).contains(dz),
                          "degree " + std::to_string(d) + ", " + I.origins[i] + ": d = " + format_element(F, dz));
            auto pz = pi(omega, z);
            killed.expect(pz.is_zero(), "degree " + std::to_string(d) + ", " + I.origins[i] + ": pi = " +
                                            format_element(omega, pz));
        }
    }
    return {stable, killed};
}

}  // namespace s2cobar
