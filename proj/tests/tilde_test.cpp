#include "s2cobar/algebra/tensor_hopf.hpp"
#include "s2cobar/tilde/ideal.hpp"
#include "s2cobar/tilde/retraction.hpp"

#include <gtest/gtest.h>

using namespace s2cobar;

namespace {

const Ring Z = Ring::integers();
const Ring Z2 = Ring::mod(2);

using Word = std::vector<int>;
using Words = std::vector<Word>;
using Free = FreeS2<TensorHopf>;
using Key = Free::key_type;
using Elem = LinComb<Key>;

std::string first(const CheckResult& r) { return r.failures.empty() ? "" : r.failures.front(); }

Elem single(const Ring& ring, const Surj& u, const Words& w) { return Elem(ring, Key{u, w}); }

// number of tensor words of each degree in T(V) minus the unit
std::vector<long long> augmentation_dims(const std::vector<int>& gens, int hi)
{
    std::vector<long long> n(static_cast<std::size_t>(hi) + 1, 0);
    n[0] = 1;
    for (int d = 1; d <= hi; ++d)
        for (int g : gens)
            if (g <= d)
                n[static_cast<std::size_t>(d)] += n[static_cast<std::size_t>(d - g)];
    n[0] = 0;
    return n;
}

}  // namespace

TEST(FreeS2, ArityOneBasisIsGenerators)
{
    auto T = TensorHopf::primitive(Z, {2, 3}, {"v", "w"});
    Free F(T, 6);
    auto arity_one = [&](int d) {
        std::vector<Key> out;
        for (auto& k : F.basis(d))
            if (k.first == Surj{1})
                out.push_back(k);
        return out;
    };
    EXPECT_EQ(arity_one(1), std::vector<Key>{F.generator({0})});
    EXPECT_EQ(arity_one(2), std::vector<Key>{F.generator({1})});
    // T(v,w) has two words of degree 5
    EXPECT_EQ(arity_one(4).size(), 2u);
    EXPECT_EQ(F.basis(2).size(), 2u);  // [w] and (1,2)([v],[v])
}

TEST(FreeS2, NormalFormSign)
{
    auto T = TensorHopf::primitive(Z, {2, 3}, {"v", "w"});
    Free F(T, 6);
    const Word v{0}, w{1}, vw{0, 1};
    // |[v]| = 1, |[w]| = 2, |[vw]| = 4
    auto [s1, k1] = F.normal_form(Surj{2, 1}, {v, w});
    EXPECT_EQ(k1, (Key{Surj{1, 2}, Words{w, v}}));
    EXPECT_EQ(s1, 1);
    auto [s2, k2] = F.normal_form(Surj{2, 1}, {v, v});
    EXPECT_EQ(k2, (Key{Surj{1, 2}, Words{v, v}}));
    EXPECT_EQ(s2, -1);
    auto [s3, k3] = F.normal_form(Surj{2, 1, 2}, {v, vw});
    EXPECT_EQ(k3, (Key{Surj{1, 2, 1}, Words{vw, v}}));
    EXPECT_EQ(s3, 1);
}

TEST(FreeS2, DimensionsMatchOrbitCount)
{
    // Σ_r acts freely on nondegenerate sequences, so the coinvariants have
    // dimension |S2(r)_k| · #words / r!
    const std::vector<int> gens{2, 3};
    auto T = TensorHopf::primitive(Z, gens, {"v", "w"});
    const int hi = 6;
    Free F(T, hi + 1);
    auto aug = augmentation_dims(gens, hi + 1);
    for (int d = 1; d <= hi; ++d) {
        long long expected = 0;
        for (int r = 1; r <= d; ++r) {
            long long fact = 1;
            for (int i = 2; i <= r; ++i)
                fact *= i;
            for (int k = 0; k + r <= d; ++k) {
                long long ops = static_cast<long long>(enumerate_surjections(r, k, 2).size());
                if (ops == 0)
                    continue;
                EXPECT_EQ(ops % fact, 0);
                // words of r desuspended generators with total degree d - k
                std::vector<long long> ways(static_cast<std::size_t>(d - k) + 1, 0);
                ways[0] = 1;
                for (int step = 0; step < r; ++step) {
                    std::vector<long long> next(ways.size(), 0);
                    for (std::size_t a = 0; a < ways.size(); ++a)
                        for (std::size_t e = 1; a + e < ways.size(); ++e)
                            next[a + e] += ways[a] * aug[e + 1];
                    ways = next;
                }
                expected += ops / fact * ways[static_cast<std::size_t>(d - k)];
            }
        }
        EXPECT_EQ(static_cast<long long>(F.basis(d).size()), expected) << "degree " << d;
    }
    EXPECT_THROW(F.basis(hi + 1), WindowExceeded);
}

TEST(FreeS2, DifferentialSquaresToZero)
{
    for (const Ring& ring : {Z, Z2}) {
        for (auto T : {TensorHopf::primitive(ring, {2, 3}, {"v", "w"}), nonprimitive_example(ring)}) {
            Free F(T, 8);
            std::size_t n = 0;
            for (int d = 1; d <= 6; ++d)
                for (auto& k : F.basis(d)) {
                    auto dd = differential_of(F, F.differential(k));
                    EXPECT_TRUE(dd.is_zero()) << F.label(k) << " -> " << format_element(F, dd);
                    ++n;
                }
            EXPECT_GT(n, 100u);
        }
    }
}

TEST(FreeS2, CoproductPartVanishesOnPrimitives)
{
    auto T = TensorHopf::primitive(Z, {2, 3}, {"v", "w"});
    Free F(T, 6);
    EXPECT_TRUE(F.coproduct_differential(F.generator({0})).is_zero());
    EXPECT_TRUE(F.coproduct_differential(F.generator({1})).is_zero());
    // ∂_Δ[vw] = (-1)^{|v|}(1,2)([v],[w]) + (-1)^{|w|}(1,2)([w],[v])
    Elem expected(Z);
    expected.add(Key{Surj{1, 2}, Words{{0}, {1}}}, 1);
    expected.add(Key{Surj{1, 2}, Words{{1}, {0}}}, -1);
    EXPECT_EQ(F.coproduct_differential(F.generator({0, 1})), expected);
}

TEST(FreeS2, UnitInputs)
{
    auto T = TensorHopf::primitive(Z, {2}, {"v"});
    Free F(T, 4);
    const Key v = F.generator({0});
    EXPECT_EQ(F.product(F.unit_key(), v), Elem(Z, v));
    EXPECT_EQ(F.product(v, F.unit_key()), Elem(Z, v));
    EXPECT_TRUE(F.brace(F.unit_key(), {v}).is_zero());
    EXPECT_TRUE(F.brace(v, {F.unit_key()}).is_zero());
    EXPECT_EQ(F.brace(v, {}), Elem(Z, v));
}

TEST(PiIota, CompositionIsIdentity)
{
    for (const Ring& ring : {Z, Z2}) {
        auto r = check_pi_iota(TensorHopf::primitive(ring, {2, 3, 4}, {"a", "b", "c"}), 5, 3);
        EXPECT_TRUE(r.ok()) << first(r);
        EXPECT_GT(r.checked, 200u);
    }
}

TEST(PiIota, ChainAndAlgebraMaps)
{
    for (auto T : {TensorHopf::primitive(Z, {2, 3}, {"v", "w"}), nonprimitive_example(Z)}) {
        Free F(T, 8);
        Cobar<TensorHopf> O(T, {1, 8, 8});
        std::size_t n = 0;
        for (int d = 1; d <= 6; ++d)
            for (auto& k : F.basis(d)) {
                auto lhs = pi(O, F.differential(k));
                auto rhs = differential_of(O, pi(O, k));
                EXPECT_EQ(lhs, rhs) << F.label(k);
                ++n;
            }
        EXPECT_GT(n, 100u);
        for (int d = 1; d <= 6; ++d)
            for (auto& w : O.basis(d)) {
                Elem dw(Z);
                for (auto& [x, c] : O.differential(w))
                    dw.add(iota(F, x), c);
                EXPECT_EQ(differential_of(F, iota(F, w)), dw) << O.label(w);
                for (auto& u : O.basis(2)) {
                    Words uw = w;
                    uw.insert(uw.end(), u.begin(), u.end());
                    EXPECT_EQ(multiply(F, iota(F, w), iota(F, u)), iota(F, uw));
                }
            }
    }
}

TEST(PiIota, PinnedValues)
{
    auto T = TensorHopf::primitive(Z2, {2, 2, 2}, {"c1", "c2", "c3"});
    Cobar<TensorHopf> O(T, {1, 6, 6});
    const Word c1{0}, c2{1}, c3{2};
    auto brace = pi(O, Key{Surj{1, 2, 1}, Words{c1, c2}});
    EXPECT_EQ(brace, O.brace({c1}, {Words{c2}}));
    auto x = pi(O, Key{Surj{1, 2, 3, 1}, Words{c1, c2, c3}});
    LinComb<Words> expected(Z2);
    expected.add(Words{{0, 1}, c3}, 1);
    expected.add(Words{c2, {0, 2}}, 1);
    EXPECT_EQ(x, expected);
}

TEST(Retraction, WorkedExampleOverZ2)
{
    TildeRetraction M(TensorHopf::primitive(Z2, {2, 2, 2}, {"c1", "c2", "c3"}));
    const Words c{{0}, {1}, {2}};
    const Key x{Surj{1, 2, 3, 1}, c};
    EXPECT_EQ(M.h(x), single(Z2, Surj{1, 2, 1, 3, 1}, c));
    Elem px(Z2);
    px.add(Key{Surj{1, 2, 1, 3}, c}, 1);
    px.add(Key{Surj{1, 2, 3, 2}, Words{c[1], c[0], c[2]}}, 1);  // (2,1,3,1)(c) in normal form
    EXPECT_EQ(M.p(x), px);
    EXPECT_TRUE(M.h(M.free().differential(x)).is_zero());
    const auto& rec = M.record(Surj{1, 2, 3, 1}, {2, 2, 2});
    OpElem o(Z2);
    o.add(Surj{1, 2, 3, 1}, 1);
    o.add(Surj{1, 2, 1, 3}, 1);
    o.add(Surj{2, 1, 3, 1}, 1);
    EXPECT_EQ(rec.o, o);
    EXPECT_EQ(rec.j, 1);
    EXPECT_TRUE(rec.S.empty());
    EXPECT_EQ(rec.b, op(Z2, Surj{1, 2, 1, 3, 1}));
}

TEST(Retraction, DegreeZeroHasNoHomotopy)
{
    TildeRetraction M(TensorHopf::primitive(Z, {2, 3}));
    EXPECT_TRUE(M.h(Key{Surj{1, 2}, Words{{0}, {1}}}).is_zero());
    EXPECT_TRUE(M.h(M.free().generator({1})).is_zero());
}

TEST(Retraction, EquationsHold)
{
    struct Case {
        Ring ring;
        std::vector<int> degrees;
    };
    const std::vector<Case> cases{{Z2, {2, 3, 4}}, {Z, {2, 3, 4}}, {Z, {3, 3, 3}}, {Z, {2, 2, 2}},
                                  {Z, {2}},        {Z, {3}},       {Z, {2, 5}},    {Z2, {2}}};
    for (const auto& c : cases) {
        RetractionBound bound;
        bound.degrees = c.degrees;
        bound.max_arity = 3;
        bound.max_op_degree = 4;
        for (const auto& r : verify_retraction(c.ring, bound)) {
            EXPECT_TRUE(r.ok()) << r.id << ": " << first(r);
            EXPECT_GT(r.checked, 0u) << r.id;
        }
    }
}

TEST(Retraction, RetractsOntoGenerators)
{
    auto T = TensorHopf::primitive(Z, {2, 3}, {"v", "w"});
    TildeRetraction M(T);
    Free full(T, 8);
    Free::word_type letters;
    // r∘i = id on S2(Σ⁻¹V)
    for (auto& x : retraction_domain(M, {{2, 3}, 3, 4}))
        EXPECT_EQ(M.retract(Elem(Z, x)), Elem(Z, x)) << full.label(x);
    // r is a chain map and kills I
    for (int d = 1; d <= 5; ++d) {
        for (auto& k : full.basis(d))
            EXPECT_EQ(M.retract(full.differential(k)), M.d(M.retract(Elem(Z, k)))) << full.label(k);
        for (auto& z : ideal_span(full, d).elements)
            EXPECT_TRUE(M.retract(z).is_zero()) << format_element(full, z);
    }
}

TEST(Retraction, RejectsNonPrimitive) { EXPECT_THROW(TildeRetraction(nonprimitive_example(Z)), NotPrimitivelyGenerated); }

TEST(Ideal, GeneratorIsMember)
{
    for (const Ring& ring : {Z, Z2}) {
        auto T = TensorHopf::primitive(ring, {2, 3}, {"v", "w"});
        Free F(T, 8);
        auto g = ideal_generator(F, Word{0}, Word{1});
        auto I = ideal_span(F, 4);
        EXPECT_TRUE(I.contains(g));
        // [vw] alone is not in I
        Elem vw(ring, F.generator({0, 1}));
        EXPECT_FALSE(I.contains(vw));
        Elem brace = g;
        brace.add(vw, -1);
        EXPECT_TRUE(quotient_eq(vw, Elem(brace) *= -1, I));
    }
}

TEST(Ideal, StableUnderDifferentialAndKilledByPi)
{
    for (const Ring& ring : {Z, Z2})
        for (auto degrees : {std::vector<int>{2, 3, 4}, std::vector<int>{3, 3}, std::vector<int>{2}}) {
            auto T = TensorHopf::primitive(ring, degrees);
            Free F(T, 9);
            Cobar<TensorHopf> O(T, {1, 9, 9});
            for (auto& r : check_ideal(F, O, 1, 7)) {
                EXPECT_TRUE(r.ok()) << r.id << ": " << first(r);
                EXPECT_GT(r.checked, 5u);
            }
        }
}

TEST(Ideal, WrongSignIsDetected)
{
    // negating the brace term of g breaks π(g) = 0 over Z
    auto T = TensorHopf::primitive(Z, {2, 3}, {"v", "w"});
    Free F(T, 8);
    Cobar<TensorHopf> O(T, {1, 8, 8});
    auto g = ideal_generator(F, Word{1}, Word{0, 1});
    Elem flipped(Z);
    for (auto& [k, c] : g)
        flipped.add(k, k.second.size() == 1 ? c : -c);
    EXPECT_TRUE(pi(O, g).is_zero());
    EXPECT_FALSE(pi(O, flipped).is_zero());
}
