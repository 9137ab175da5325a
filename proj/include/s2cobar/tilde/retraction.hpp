#pragma once

#include "s2cobar/algebra/tensor_hopf.hpp"
#include "s2cobar/barcobar/twisting.hpp"
#include "s2cobar/core/report.hpp"
#include "s2cobar/tilde/free_s2.hpp"

#include <map>
#include <memory>
#include <set>

namespace s2cobar {

/// Data behind h on x = α([c_1], .., [c_k]) with distinct formal primitives of
/// the given degrees: y = x - p(x) - h∂x = o_α(c), b_α = h_(j,S)(o_α).
struct HomotopyRecord {
    Surj alpha;
    std::vector<int> degrees;
    OpElem o;
    int j = 0;
    std::set<int> S;
    OpElem b;
    bool o_is_cycle = true;
};

/// Memo shared by every model built for one verification run, keyed by the
/// normalized sequence and the degrees of its inputs.
struct HomotopyTable {
    std::map<std::pair<Surj, std::vector<int>>, HomotopyRecord> records;
};

/// The retraction data for C = TV, V primitive, d = 0:
/// S2(Σ⁻¹V) ≅ Ω̃C, p = r∘ι∘π where r is induced by the Hopf twisting morphism
/// f : C -> S2(Σ⁻¹V) extending v ↦ [v], and the homotopy h.
class TildeRetraction {
public:
    using Word = std::vector<int>;
    using Free = FreeS2<TensorHopf>;
    using key_type = Free::key_type;
    using Elem = LinComb<key_type>;

    TildeRetraction(TensorHopf T, std::shared_ptr<HomotopyTable> table = std::make_shared<HomotopyTable>())
        : T_(std::move(T)),
          F_(T_, max_generator_degree(T_), true, [](const Word& w) { return w.size() == 1; }),
          omega_(T_, {1, 64, 64}),
          table_(std::move(table))
    {
        if (!T_.is_primitively_generated() || !T_.has_zero_differential())
            throw NotPrimitivelyGenerated("the homotopy is built for primitively generated TV with d = 0");
        std::function<LinComb<key_type>(int)> f0 = [this](int g) { return Elem(F_.ring(), F_.generator(Word{g})); };
        f_ = extend_hopf_twisting_free(T_, F_, f0);
    }

    const TensorHopf& coalgebra() const { return T_; }
    const Free& free() const { return F_; }
    const Cobar<TensorHopf>& cobar() const { return omega_; }
    const Ring& ring() const { return T_.ring(); }
    HomotopyTable& table() const { return *table_; }

    /// The twisting morphism f : C -> S2(Σ⁻¹V).
    Elem f(const Word& c) const { return f_(c); }

    /// r on cobar words: [c_1|..|c_k] ↦ f(c_1)..f(c_k).
    Elem r(const std::vector<Word>& w) const
    {
        std::vector<Elem> xs;
        for (const auto& c : w)
            xs.push_back(f_(c));
        if (xs.empty())
            return Elem(ring(), F_.unit_key());
        return multiply_all(F_, xs);
    }
    Elem r(const LinComb<std::vector<Word>>& z) const
    {
        Elem out(ring());
        for (const auto& [w, c] : z)
            out.add(r(w), c);
        return out;
    }

    /// r on S2(Σ⁻¹C̄): the S2-algebra map extending [c] ↦ f(c).  It kills the
    /// ideal I, and composed with S2(Σ⁻¹V) -> S2(Σ⁻¹C̄) it is the identity.
    Elem retract(const key_type& k) const
    {
        if (F_.is_unit(k))
            return Elem(ring(), F_.unit_key());
        std::vector<Elem> xs;
        for (const auto& c : k.second)
            xs.push_back(f_(c));
        return F_.operate(k.first, xs);
    }
    Elem retract(const Elem& z) const { return apply(z, [this](const key_type& k) { return retract(k); }); }

    LinComb<std::vector<Word>> pi(const key_type& k) const { return s2cobar::pi(omega_, k); }
    LinComb<std::vector<Word>> pi(const Elem& z) const { return s2cobar::pi(omega_, z); }

    Elem p(const key_type& k) const { return r(pi(k)); }
    Elem p(const Elem& z) const { return apply(z, [this](const key_type& k) { return p(k); }); }

    Elem d(const Elem& z) const { return differential_of(F_, z); }

    Elem h(const key_type& k) const
    {
        if (F_.is_unit(k) || op_degree(k.first) == 0)
            return Elem(ring());
        std::vector<int> degrees;
        for (const auto& g : k.second)
            degrees.push_back(T_.degree(g));
        const auto& rec = record(k.first, degrees);
        return F_.element(rec.b, k.second);
    }
    Elem h(const Elem& z) const { return apply(z, [this](const key_type& k) { return h(k); }); }

    /// The record for α on distinct formal primitives of the given degrees.
    const HomotopyRecord& record(const Surj& alpha, const std::vector<int>& degrees) const
    {
        auto key = std::make_pair(alpha, degrees);
        if (auto it = table_->records.find(key); it != table_->records.end())
            return it->second;
        HomotopyRecord rec = build(alpha, degrees);
        return table_->records.emplace(key, std::move(rec)).first->second;
    }

private:
    static int max_generator_degree(const TensorHopf& T)
    {
        int m = 1;
        for (std::size_t g = 0; g < T.generator_count(); ++g)
            m = std::max(m, T.generator(static_cast<int>(g)).degree);
        return m;
    }

    template <class Fn>
    Elem apply(const Elem& z, Fn fn) const
    {
        Elem out(ring());
        for (const auto& [k, c] : z)
            out.add(fn(k), c);
        return out;
    }

    HomotopyRecord build(const Surj& alpha, const std::vector<int>& degrees) const
    {
        HomotopyRecord rec;
        rec.alpha = alpha;
        rec.degrees = degrees;
        const int k = static_cast<int>(degrees.size());
        // naturality: work on TV with V spanned by k distinct primitives
        TildeRetraction M(TensorHopf::primitive(ring(), degrees), table_);
        Word letters;
        std::vector<Word> c;
        for (int i = 0; i < k; ++i)
            c.push_back(Word{i});
        const key_type x{alpha, c};
        Elem y(ring(), x);
        y.add(M.p(x), -1);
        y.add(M.h(M.F_.differential(x)), -1);

        OpElem o(ring());
        for (const auto& [key, coef] : y) {
            std::vector<int> perm;
            for (const auto& g : key.second)
                perm.push_back(g.at(0) + 1);
            if (std::set<int>(perm.begin(), perm.end()).size() != static_cast<std::size_t>(k))
                throw std::logic_error("y is not multilinear in the formal generators");
            Surj gamma_ = sigma_act(perm, key.first);
            auto [s, nf] = M.F_.normal_form(gamma_, c);
            if (nf != key)
                throw std::logic_error("relabeling does not invert the normal form");
            o.add(gamma_, coef * s);
        }
        rec.o = o;
        rec.o_is_cycle = s2cobar::differential(o).is_zero();

        std::set<int> seen;
        std::size_t first = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (!seen.insert(alpha[i]).second) {
                rec.j = alpha[i];
                break;
            }
        if (rec.j == 0)
            throw std::logic_error("positive-degree sequence without a repeat");
        while (alpha[first] != rec.j)
            ++first;
        for (std::size_t i = 0; i < first; ++i)
            rec.S.insert(alpha[i]);
        rec.b = insertion_homotopy(rec.j, rec.S, o);
        for (const auto& [u, e] : rec.b)
            if (complexity(u) > 2)
                throw NotComplexityTwo("b_alpha for " + to_string(alpha) + " contains " + to_string(u));
        return rec;
    }

    TensorHopf T_;
    Free F_;
    Cobar<TensorHopf> omega_;
    std::shared_ptr<HomotopyTable> table_;
    std::function<LinComb<key_type>(const Word&)> f_;
};

struct RetractionBound {
    std::vector<int> degrees{2, 3, 4};  // degrees of the primitive generators of V
    int max_arity = 3;
    int max_op_degree = 4;
};

/// Normal-form basis elements (u, word) with word letters in V, arity and
/// operad degree within the bound.
inline std::vector<TildeRetraction::key_type> retraction_domain(const TildeRetraction& M, const RetractionBound& bound)
{
    std::vector<TildeRetraction::key_type> out;
    const int n = static_cast<int>(M.coalgebra().generator_count());
    for (int r = 1; r <= bound.max_arity; ++r) {
        std::vector<Surj> ops;
        for (int k = 0; k <= bound.max_op_degree; ++k)
            for (auto& u : normalized_s2(r, k))
                ops.push_back(u);
        std::vector<int> idx(static_cast<std::size_t>(r), 0);
        while (true) {
            TildeRetraction::Free::word_type w;
            for (int i : idx)
                w.push_back({i});
            for (auto& u : ops)
                out.push_back({u, w});
            int pos = r - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n)
                idx[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0)
                break;
        }
    }
    return out;
}

/// ∂h + h∂ = 1 - p, h² = 0, hp = ph = 0, p² = p, π∘r = id, r∘ι = id on
/// S2(Σ⁻¹V) images, and h(xy) = h(x)p(y) + (-1)^{|x|} x h(y).
inline std::vector<CheckResult> verify_retraction(const Ring& ring, const RetractionBound& bound)
{
    using Elem = TildeRetraction::Elem;
    TildeRetraction M(TensorHopf::primitive(ring, bound.degrees));
    const auto& F = M.free();
    auto domain = retraction_domain(M, bound);
    CheckResult homotopy("dh+hd=1-p"), hh("h^2=0"), hp("hp=0"), ph("ph=0"), pp("p^2=p"), chain("dp=pd"),
        section("pi r=id"), derivation("h(xy)=h(x)p(y)+-xh(y)"), s2("b_alpha in S2, o_alpha cycle"),
        triple("b_alpha repeats a value three times");
    auto show = [&](const Elem& z) { return format_element(F, z); };
    for (const auto& x : domain) {
        Elem ex(ring, x);
        Elem hx = M.h(x), px = M.p(x);
        Elem lhs = M.d(hx);
        lhs.add(M.h(F.differential(x)));
        Elem rhs = ex;
        rhs.add(px, -1);
        homotopy.expect(lhs == rhs, F.label(x) + ": dh+hd = " + show(lhs) + ", 1-p = " + show(rhs));
        hh.expect(M.h(hx).is_zero(), F.label(x) + ": h h x = " + show(M.h(hx)));
        hp.expect(M.h(px).is_zero(), F.label(x) + ": h p x = " + show(M.h(px)));
        ph.expect(M.p(hx).is_zero(), F.label(x) + ": p h x = " + show(M.p(hx)));
        pp.expect(M.p(px) == px, F.label(x) + ": p p x = " + show(M.p(px)));
        chain.expect(M.d(px) == M.p(F.differential(x)), F.label(x));
        auto w = M.pi(x);
        section.expect(M.pi(M.r(w)) == w, F.label(x));
    }
    for (const auto& [key, rec] : M.table().records) {
        bool in_s2 = true;
        for (const auto& [u, c] : rec.b)
            in_s2 = in_s2 && complexity(u) <= 2;
        s2.expect(in_s2 && rec.o_is_cycle, to_string(key.first) + ": o = " + to_string(rec.o));
        bool three = true;
        for (const auto& [u, c] : rec.b) {
            std::map<int, int> count;
            int most = 0;
            for (int v : u)
                most = std::max(most, ++count[v]);
            three = three && most >= 3;
        }
        triple.expect(three, to_string(key.first) + ": b = " + to_string(rec.b));
    }
    // derivation law on products of domain elements
    for (const auto& x : domain)
        for (const auto& y : domain) {
            if (x.second.size() + y.second.size() > static_cast<std::size_t>(bound.max_arity))
                continue;
            if (op_degree(x.first) + op_degree(y.first) > bound.max_op_degree)
                continue;
            Elem xy = F.product(x, y);
            Elem lhs = M.h(xy);
            Elem rhs(ring);
            Elem ex(ring, x), ey(ring, y);
            rhs.add(multiply(F, M.h(x), M.p(y)));
            rhs.add(multiply(F, ex, M.h(y)), sign_of(F.degree(x)));
            derivation.expect(lhs == rhs, F.label(x) + " * " + F.label(y) + ": h(xy) = " + show(lhs) +
                                              ", h(x)p(y) +- x h(y) = " + show(rhs));
        }
    return {homotopy, hh, hp, ph, pp, chain, section, derivation, s2, triple};
}

/// π∘ι = id on cobar words of C = TV up to the given word length and letter degree.
inline CheckResult check_pi_iota(const TensorHopf& T, int max_letter_degree, int max_length)
{
    CheckResult out("pi iota=id");
    FreeS2<TensorHopf> F(T, max_letter_degree);
    Cobar<TensorHopf> omega(T, {1, max_letter_degree, max_length});
    std::vector<std::vector<int>> letters;
    for (int e = 1; e <= max_letter_degree; ++e)
        for (auto& c : T.basis(e))
            letters.push_back(c);
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self) -> void {
        auto z = pi(omega, iota(F, cur));
        out.expect(z == LinComb<std::vector<std::vector<int>>>(T.ring(), cur), omega.label(cur));
        if (static_cast<int>(cur.size()) == max_length)
            return;
        for (const auto& c : letters) {
            cur.push_back(c);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// The three-generator instance over Z/2: h((1,2,3,1)(c)) = (1,2,1,3,1)(c) with
/// o_α = (1,2,3,1) + (1,2,1,3) + (2,1,3,1), j = 1, S = ∅.
inline CheckResult check_worked_example()
{
    using Elem = TildeRetraction::Elem;
    using Key = TildeRetraction::key_type;
    const Ring Z2 = Ring::mod(2);
    CheckResult out("h((1,2,3,1)(c)) = (1,2,1,3,1)(c) over Z/2");
    TildeRetraction M(TensorHopf::primitive(Z2, {2, 2, 2}, {"c1", "c2", "c3"}));
    const std::vector<std::vector<int>> c{{0}, {1}, {2}};
    const Key x{Surj{1, 2, 3, 1}, c};
    Elem hx = M.h(x);
    out.expect(hx == Elem(Z2, Key{Surj{1, 2, 1, 3, 1}, c}), "h x = " + format_element(M.free(), hx));
    const auto& rec = M.record(Surj{1, 2, 3, 1}, {2, 2, 2});
    OpElem o(Z2);
    o.add(Surj{1, 2, 3, 1}, 1);
    o.add(Surj{1, 2, 1, 3}, 1);
    o.add(Surj{2, 1, 3, 1}, 1);
    out.expect(rec.o == o, "o_alpha = " + to_string(rec.o));
    out.expect(rec.j == 1 && rec.S.empty(), "j_alpha = " + std::to_string(rec.j));
    out.expect(rec.b == op(Z2, Surj{1, 2, 1, 3, 1}), "b_alpha = " + to_string(rec.b));
    out.notes.push_back("o_alpha = " + to_string(rec.o) + ", b_alpha = " + to_string(rec.b));
    return out;
}

}  // namespace s2cobar
