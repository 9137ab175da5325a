#pragma once

#include "s2cobar/barcobar/words.hpp"

#include <vector>

namespace s2cobar {

/// Bar construction BA = T(ΣĀ) with deconcatenation coproduct and
///   d[a_1|..|a_k] = -Σ_i (-1)^{m_i}[..|da_i|..] + Σ_{i>=2} (-1)^{m_i}[..|a_{i-1}a_i|..],
/// m_i = Σ_{j<i}(|a_j| + 1).  When A has braces, product() is the
/// Gerstenhaber-Voronov product induced by the twisting morphism E.
template <class A>
class Bar {
public:
    using letter_type = typename A::key_type;
    using key_type = std::vector<letter_type>;

    Bar(A algebra, WordWindow window) : a_(std::move(algebra)), window_(window) {}

    const A& algebra() const { return a_; }
    const WordWindow& window() const { return window_; }
    const Ring& ring() const { return a_.ring(); }

    int letter_degree(const letter_type& a) const { return a_.degree(a) + 1; }
    int degree(const key_type& w) const
    {
        int d = 0;
        for (const auto& a : w)
            d += letter_degree(a);
        return d;
    }
    key_type unit_key() const { return {}; }
    bool is_unit(const key_type& w) const { return w.empty(); }

    LinComb<key_type> differential(const key_type& w) const
    {
        LinComb<key_type> out(ring());
        int m = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [k, e] : a_.differential(w[i])) {
                key_type v = w;
                v[i] = k;
                out.add(v, -sign_of(m) * e);
            }
            if (i >= 1)
                for (const auto& [k, e] : a_.product(w[i - 1], w[i])) {
                    if (a_.is_unit(k))
                        throw std::logic_error("product left the augmentation ideal");
                    key_type v(w.begin(), w.begin() + static_cast<long>(i) - 1);
                    v.push_back(k);
                    v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                    out.add(v, sign_of(m) * e);
                }
            m += letter_degree(w[i]);
        }
        return out;
    }

    PairComb<key_type> reduced_coproduct(const key_type& w) const
    {
        PairComb<key_type> out(ring());
        for (std::size_t i = 1; i < w.size(); ++i)
            out.add({key_type(w.begin(), w.begin() + static_cast<long>(i)), key_type(w.begin() + static_cast<long>(i), w.end())},
                    1);
        return out;
    }

    /// E([x] ⊗ [y_1|..|y_n]) = (-1)^{n|x| + Σ(n-i)|y_i|} x{y_1..y_n}, E([a] ⊗ 1) = a,
    /// E(1 ⊗ [b]) = b, and E vanishes on all other pieces.
    LinComb<letter_type> twisting_E(const key_type& u, const key_type& v) const
    {
        LinComb<letter_type> out(ring());
        if (u.empty()) {
            if (v.size() == 1)
                out.add(v.front(), 1);
            return out;
        }
        if (u.size() != 1)
            return out;
        if (v.empty()) {
            out.add(u.front(), 1);
            return out;
        }
        const long long n = static_cast<long long>(v.size());
        long long parity = n * a_.degree(u.front());
        for (std::size_t i = 0; i < v.size(); ++i)
            parity += (n - 1 - static_cast<long long>(i)) * a_.degree(v[i]);
        out.add(a_.brace(u.front(), v), sign_of(parity));
        return out;
    }

    /// GV product: the coalgebra map BA⊗BA -> BA determined by E.  Pieces of
    /// the iterated reduced diagonal of u⊗v carry the Koszul sign of moving
    /// each v-part past the later u-parts.
    LinComb<key_type> product(const key_type& u, const key_type& v) const
    {
        LinComb<key_type> out(ring());
        std::vector<LinComb<letter_type>> letters;
        // position in u, position in v, parity so far
        auto rec = [&](auto&& self, std::size_t i, std::size_t j, long long parity, int vdeg_so_far) -> void {
            if (i == u.size() && j == v.size()) {
                for (const auto& [w, c] : expand_words(ring(), letters))
                    out.add(w, sign_of(parity) * c);
                return;
            }
            // a lone v letter
            if (j < v.size()) {
                key_type vp{v[j]};
                letters.push_back(twisting_E({}, vp));
                self(self, i, j + 1, parity, vdeg_so_far + letter_degree(v[j]));
                letters.pop_back();
            }
            // u letter with a block v[j..k)
            if (i < u.size()) {
                key_type up{u[i]};
                long long p = parity + static_cast<long long>(letter_degree(u[i])) * vdeg_so_far;
                int block = 0;
                for (std::size_t k = j; k <= v.size(); ++k) {
                    key_type vp(v.begin() + static_cast<long>(j), v.begin() + static_cast<long>(k));
                    auto e = twisting_E(up, vp);
                    if (!e.is_zero()) {
                        for (const auto& [l, c] : e)
                            if (a_.is_unit(l))
                                throw std::logic_error("brace left the augmentation ideal");
                        letters.push_back(e);
                        self(self, i + 1, k, p, vdeg_so_far + block);
                        letters.pop_back();
                    }
                    if (k < v.size())
                        block += letter_degree(v[k]);
                }
            }
        };
        rec(rec, 0, 0, 0, 0);
        return out;
    }

    std::vector<key_type> basis(int d) const { return enumerate_words(a_, window_, 1, d); }
    std::string label(const key_type& w) const { return word_label(a_, w); }

private:
    A a_;
    WordWindow window_;
};

}  // namespace s2cobar
