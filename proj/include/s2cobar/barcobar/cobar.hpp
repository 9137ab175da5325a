#pragma once

#include "s2cobar/barcobar/words.hpp"

#include <vector>

namespace s2cobar {

/// Cobar construction ΩC = T(Σ⁻¹C̄): words [c_1|...|c_k] of degree Σ(|c_i| - 1),
/// concatenation product and d[c] = -[dc] + (-1)^{|c'|}[c'|c''] extended as a
/// derivation.  When C is a Hopf algebra the braces are Kadeishvili's.
template <class C>
class Cobar {
public:
    using letter_type = typename C::key_type;
    using key_type = std::vector<letter_type>;

    Cobar(C coalgebra, WordWindow window) : c_(std::move(coalgebra)), window_(window) {}

    const C& coalgebra() const { return c_; }
    const WordWindow& window() const { return window_; }
    const Ring& ring() const { return c_.ring(); }

    int letter_degree(const letter_type& c) const { return c_.degree(c) - 1; }
    int degree(const key_type& w) const
    {
        int d = 0;
        for (const auto& c : w)
            d += letter_degree(c);
        return d;
    }
    key_type unit_key() const { return {}; }
    bool is_unit(const key_type& w) const { return w.empty(); }

    LinComb<key_type> product(const key_type& a, const key_type& b) const
    {
        key_type w = a;
        w.insert(w.end(), b.begin(), b.end());
        return LinComb<key_type>(ring(), w);
    }

    /// d[c] on a single letter.
    LinComb<key_type> letter_differential(const letter_type& c) const
    {
        LinComb<key_type> out(ring());
        for (const auto& [k, e] : c_.differential(c)) {
            if (c_.is_unit(k))
                throw std::logic_error("differential leaves the augmentation ideal");
            out.add(key_type{k}, -e);
        }
        for (const auto& [pr, e] : c_.reduced_coproduct(c))
            out.add(key_type{pr.first, pr.second}, sign_of(c_.degree(pr.first)) * e);
        return out;
    }

    LinComb<key_type> differential(const key_type& w) const
    {
        LinComb<key_type> out(ring());
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [mid, e] : letter_differential(w[i])) {
                key_type v(w.begin(), w.begin() + static_cast<long>(i));
                v.insert(v.end(), mid.begin(), mid.end());
                v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                out.add(v, sign_of(before) * e);
            }
            before += letter_degree(w[i]);
        }
        return out;
    }

    /// [x]{[y_1|...|y_q]} = (-1)^α [x^(1)y_1|...|x^(q)y_q],
    /// α = Σ_{j>=2} |x^(j)| Σ_{k<j} |[y_k]| + |x| - 1.
    LinComb<key_type> first_brace(const letter_type& x, const key_type& ys) const
    {
        LinComb<key_type> out(ring());
        const int q = static_cast<int>(ys.size());
        for (const auto& [parts, e] : iterated_coproduct(c_, x, q)) {
            long long alpha = c_.degree(x) - 1;
            int before = 0;
            std::vector<LinComb<letter_type>> letters;
            for (int j = 0; j < q; ++j) {
                if (j > 0)
                    alpha += static_cast<long long>(c_.degree(parts[static_cast<std::size_t>(j)])) * before;
                before += letter_degree(ys[static_cast<std::size_t>(j)]);
                letters.push_back(c_.product(parts[static_cast<std::size_t>(j)], ys[static_cast<std::size_t>(j)]));
            }
            for (const auto& [w, f] : expand_words(ring(), letters)) {
                for (const auto& l : w)
                    if (c_.is_unit(l))
                        throw std::logic_error("product left the augmentation ideal");
                out.add(w, sign_of(alpha) * e * f);
            }
        }
        return out;
    }

    /// Braces: singleton heads take only one argument; longer heads are
    /// expanded by the product rule (xy){β} = Σ ± x{β_1..β_i} y{β_{i+1}..}.
    LinComb<key_type> brace(const key_type& x, const std::vector<key_type>& betas) const
    {
        if (betas.empty())
            return LinComb<key_type>(ring(), x);
        if (x.empty())
            return LinComb<key_type>(ring());
        for (const auto& b : betas)
            if (b.empty())
                return LinComb<key_type>(ring());
        if (x.size() == 1) {
            if (betas.size() > 1)
                return LinComb<key_type>(ring());
            return first_brace(x.front(), betas.front());
        }
        const key_type head{x.front()};
        const key_type rest(x.begin() + 1, x.end());
        const int n = static_cast<int>(betas.size());
        const int dh = degree(head), dr = degree(rest);
        LinComb<key_type> out(ring());
        long long sum = 0;
        for (int i = 0; i <= std::min(n, 1); ++i) {
            if (i > 0)
                sum += degree(betas[0]);
            std::vector<key_type> second(betas.begin() + i, betas.end());
            long long gamma = sum * dr + static_cast<long long>(n - i) * (dh + sum);
            LinComb<key_type> left = i == 0 ? LinComb<key_type>(ring(), head) : first_brace(head.front(), betas[0]);
            LinComb<key_type> right = brace(rest, second);
            for (const auto& [a, e] : left)
                for (const auto& [b, f] : right) {
                    key_type w = a;
                    w.insert(w.end(), b.begin(), b.end());
                    out.add(w, sign_of(gamma) * e * f);
                }
        }
        return out;
    }

    std::vector<key_type> basis(int d) const { return enumerate_words(c_, window_, -1, d); }
    std::string label(const key_type& w) const { return word_label(c_, w); }

private:
    C c_;
    WordWindow window_;
};

}  // namespace s2cobar
