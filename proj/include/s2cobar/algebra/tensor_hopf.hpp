#pragma once

#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"

#include <string>
#include <vector>

namespace s2cobar {

/// Tensor algebra T(V) on finitely many generators of positive degree.
/// Generators are primitive unless given a reduced coproduct; the coproduct
/// and differential extend multiplicatively (resp. as a derivation).
class TensorHopf {
public:
    using key_type = std::vector<int>;
    using Word = key_type;

    struct Generator {
        std::string name;
        int degree = 0;
    };

    TensorHopf(Ring ring, std::vector<Generator> gens) : ring_(ring), gens_(std::move(gens))
    {
        for (const auto& g : gens_)
            if (g.degree <= 0)
                throw std::invalid_argument("tensor Hopf generators need positive degree: " + g.name);
        diff_.assign(gens_.size(), LinComb<Word>(ring_));
        cop_.assign(gens_.size(), PairComb<Word>(ring_));
    }

    static TensorHopf primitive(Ring ring, const std::vector<int>& degrees, const std::vector<std::string>& names = {})
    {
        std::vector<Generator> g;
        for (std::size_t i = 0; i < degrees.size(); ++i)
            g.push_back({i < names.size() ? names[i] : "v" + std::to_string(i + 1), degrees[i]});
        return TensorHopf(ring, g);
    }

    void set_differential(int gen, LinComb<Word> dg) { diff_.at(static_cast<std::size_t>(gen)) = std::move(dg); }
    void set_reduced_coproduct(int gen, PairComb<Word> c) { cop_.at(static_cast<std::size_t>(gen)) = std::move(c); }

    const Ring& ring() const { return ring_; }
    std::size_t generator_count() const { return gens_.size(); }
    const Generator& generator(int g) const { return gens_.at(static_cast<std::size_t>(g)); }

    bool is_primitively_generated() const
    {
        for (const auto& c : cop_)
            if (!c.is_zero())
                return false;
        return true;
    }
    bool has_zero_differential() const
    {
        for (const auto& d : diff_)
            if (!d.is_zero())
                return false;
        return true;
    }

    int degree(const Word& w) const
    {
        int d = 0;
        for (int g : w)
            d += gens_.at(static_cast<std::size_t>(g)).degree;
        return d;
    }
    Word unit_key() const { return {}; }
    bool is_unit(const Word& w) const { return w.empty(); }

    LinComb<Word> product(const Word& a, const Word& b) const
    {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        return LinComb<Word>(ring_, w);
    }

    LinComb<Word> differential(const Word& w) const
    {
        LinComb<Word> out(ring_);
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [mid, c] : diff_[static_cast<std::size_t>(w[i])]) {
                Word v(w.begin(), w.begin() + static_cast<long>(i));
                v.insert(v.end(), mid.begin(), mid.end());
                v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                out.add(v, sign_of(before) * c);
            }
            before += degree({w[i]});
        }
        return out;
    }

    PairComb<Word> full_coproduct_of(const Word& w) const
    {
        PairComb<Word> acc(ring_, {Word{}, Word{}});
        for (int g : w) {
            PairComb<Word> dg(ring_);
            dg.add({Word{g}, Word{}}, 1);
            dg.add({Word{}, Word{g}}, 1);
            dg.add(cop_[static_cast<std::size_t>(g)]);
            PairComb<Word> next(ring_);
            for (const auto& [l, a] : acc)
                for (const auto& [r, b] : dg) {
                    // (l1 ⊗ l2)(r1 ⊗ r2) = (-1)^{|l2||r1|} l1 r1 ⊗ l2 r2
                    Word x = l.first, y = l.second;
                    x.insert(x.end(), r.first.begin(), r.first.end());
                    y.insert(y.end(), r.second.begin(), r.second.end());
                    next.add({x, y}, sign_of(static_cast<long long>(degree(l.second)) * degree(r.first)) * a * b);
                }
            acc = std::move(next);
        }
        return acc;
    }

    PairComb<Word> reduced_coproduct(const Word& w) const
    {
        PairComb<Word> out(ring_);
        if (w.empty())
            return out;
        for (const auto& [pr, c] : full_coproduct_of(w))
            if (!pr.first.empty() && !pr.second.empty())
                out.add(pr, c);
        return out;
    }

    std::vector<Word> basis(int d) const
    {
        std::vector<Word> out;
        if (d < 0)
            return out;
        Word cur;
        auto rec = [&](auto&& self, int left) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::size_t g = 0; g < gens_.size(); ++g)
                if (gens_[g].degree <= left) {
                    cur.push_back(static_cast<int>(g));
                    self(self, left - gens_[g].degree);
                    cur.pop_back();
                }
        };
        rec(rec, d);
        return out;
    }

    std::string label(const Word& w) const
    {
        if (w.empty())
            return "1";
        std::string s;
        for (int g : w)
            s += gens_.at(static_cast<std::size_t>(g)).name;
        return s;
    }

private:
    Ring ring_;
    std::vector<Generator> gens_;
    std::vector<LinComb<Word>> diff_;
    std::vector<PairComb<Word>> cop_;
};

/// T(a, b, c) with |a| = 2, |b| = 3, |c| = 5, a and b primitive,
/// Δ̄c = a⊗b + b⊗a, db = a, dc = a².  A small Hopf algebra that is neither
/// primitively generated nor has zero differential.
inline TensorHopf nonprimitive_example(const Ring& ring)
{
    TensorHopf T(ring, {{"a", 2}, {"b", 3}, {"c", 5}});
    T.set_differential(1, LinComb<std::vector<int>>(ring, {0}));
    T.set_differential(2, LinComb<std::vector<int>>(ring, {0, 0}));
    PairComb<std::vector<int>> dc(ring);
    dc.add({{0}, {1}}, 1);
    dc.add({{1}, {0}}, 1);
    T.set_reduced_coproduct(2, dc);
    return T;
}

}  // namespace s2cobar
