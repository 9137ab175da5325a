#pragma once

#include "s2cobar/core/graded.hpp"

#include <string>
#include <vector>

namespace s2cobar {

/// Degreewise dual of a connected finite-type structure: key k stands for k*,
/// |k*| = -|k|, with transposed structure constants
///   a*·b* = Σ_c <Δc, a⊗b> c*,   Δ̄(c*) = Σ <ab, c> a*⊗b*,   d(k*) = -Σ_j <dj, k> j*.
/// With these conventions the letterwise identifications (ΩC)^∨ = B(C^∨) and
/// (BA)^∨ = Ω(A^∨) carry no signs.
/// The product needs S to be a coalgebra and the coproduct needs S to be an algebra.
template <class S>
class Dual {
public:
    using key_type = typename S::key_type;

    explicit Dual(S s) : s_(std::move(s)) {}

    const S& predual() const { return s_; }
    const Ring& ring() const { return s_.ring(); }
    int degree(const key_type& k) const { return -s_.degree(k); }
    key_type unit_key() const { return s_.unit_key(); }
    bool is_unit(const key_type& k) const { return s_.is_unit(k); }
    std::vector<key_type> basis(int d) const { return s_.basis(-d); }
    std::string label(const key_type& k) const { return s_.label(k) + "*"; }

    LinComb<key_type> differential(const key_type& k) const
    {
        LinComb<key_type> out(ring());
        const int e = s_.degree(k);
        for (auto& j : s_.basis(e + 1)) {
            auto c = s_.differential(j).coefficient(k);
            if (c != 0)
                out.add(j, -c);
        }
        return out;
    }

    LinComb<key_type> product(const key_type& a, const key_type& b) const
    {
        LinComb<key_type> out(ring());
        const int da = s_.degree(a), db = s_.degree(b);
        for (auto& c : s_.basis(da + db)) {
            auto coef = full_coproduct(s_, c).coefficient({a, b});
            if (coef != 0)
                out.add(c, coef);
        }
        return out;
    }

    PairComb<key_type> reduced_coproduct(const key_type& c) const
    {
        PairComb<key_type> out(ring());
        const int dc = s_.degree(c);
        const int step = dc > 0 ? 1 : -1;
        for (int da = step; da != dc && dc != 0; da += step)
            for (auto& a : s_.basis(da)) {
                if (s_.is_unit(a))
                    continue;
                for (auto& b : s_.basis(dc - da)) {
                    if (s_.is_unit(b))
                        continue;
                    auto coef = s_.product(a, b).coefficient(c);
                    if (coef != 0)
                        out.add({a, b}, coef);
                }
            }
        return out;
    }

private:
    S s_;
};

}  // namespace s2cobar
