#pragma once

#include "s2cobar/algebra/axioms.hpp"
#include "s2cobar/algebra/small_algebras.hpp"
#include "s2cobar/algebra/tensor_hopf.hpp"
#include "s2cobar/barcobar/bar.hpp"
#include "s2cobar/barcobar/cobar.hpp"
#include "s2cobar/barcobar/dual.hpp"
#include "s2cobar/barcobar/twisting.hpp"
#include "s2cobar/ce/chevalley.hpp"
#include "s2cobar/io/ingest.hpp"
#include "s2cobar/operad/homotopy.hpp"
#include "s2cobar/s2/identities.hpp"
#include "s2cobar/s2/laws.hpp"
#include "s2cobar/tilde/ideal.hpp"
#include "s2cobar/tilde/retraction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace s2cobar {

/// Bounds and selectors for a verification run.  Unset fields fall back to
/// per-suite defaults.
struct SuiteOptions {
    std::optional<Ring> ring;
    std::optional<int> max_degree;
    std::optional<int> max_arity;
    std::optional<int> op_degree;
    std::optional<int> generators;
    std::uint64_t seed = 1;
    std::optional<std::string> input;
};

struct SuiteCheck {
    std::string suite;
    std::string anchor;
    CheckResult result;
    std::optional<std::uint64_t> seed;
    int criterion = 0;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"operad",     "braces",     "bar-s1", "cobar",
                                                "hopf-twist", "retraction", "ce",     "duality"};
    return names;
}

namespace detail {

class SuiteBuilder {
public:
    SuiteBuilder(std::string suite, const SuiteOptions& opt) : suite_(std::move(suite)), opt_(opt) {}

    void add(int criterion, std::string anchor, CheckResult r, std::optional<std::uint64_t> seed = std::nullopt)
    {
        out_.push_back({suite_, std::move(anchor), std::move(r), seed, criterion});
    }
    std::vector<Ring> rings(std::vector<Ring> defaults) const
    {
        if (opt_.ring)
            return {*opt_.ring};
        return defaults;
    }
    int bound(const std::optional<int>& v, int fallback) const
    {
        int b = v.value_or(fallback);
        if (b <= 0)
            throw InvalidValue("bounds must be positive");
        return b;
    }
    const SuiteOptions& options() const { return opt_; }
    std::vector<SuiteCheck> take() { return std::move(out_); }

private:
    std::string suite_;
    const SuiteOptions& opt_;
    std::vector<SuiteCheck> out_;
};

inline std::string ring_tag(const Ring& r) { return " [" + r.name() + "]"; }

template <class... Rs>
CheckResult merged(std::string id, const Rs&... rs)
{
    CheckResult out(std::move(id));
    (out.absorb(rs), ...);
    return out;
}

inline std::vector<SuiteCheck> suite_operad(const SuiteOptions& opt)
{
    SuiteBuilder b("operad", opt);
    const int A = b.bound(opt.max_arity, 4), D = b.bound(opt.max_degree, 6);
    const Ring Z = Ring::integers();

    CheckResult pinned("d(1,2,1) = (2,1) − (1,2)");
    OpElem expected(Z);
    expected.add(Surj{2, 1}, 1);
    expected.add(Surj{1, 2}, -1);
    OpElem got = differential(Z, {1, 2, 1});
    pinned.expect(got == expected, "d(1,2,1) = " + to_string(got));
    b.add(1, "surjection operad: pinned differential", pinned);

    CheckResult dd("d∘d = 0, arity ≤ " + std::to_string(A) + ", degree ≤ " + std::to_string(D));
    for (int n = 1; n <= A; ++n)
        for (int deg = 0; deg <= D; ++deg)
            for (auto& u : enumerate_surjections(n, deg)) {
                OpElem x = differential(differential(Z, u));
                dd.expect(x.is_zero(), to_string(u) + " -> " + to_string(x));
            }
    b.add(1, "surjection operad: square-zero differential", dd);

    const int la = std::min(A, 3), ld = std::min(D, 3);
    std::vector<Surj> pool;
    for (int n = 1; n <= la; ++n)
        for (int deg = 0; deg <= ld; ++deg)
            for (auto& u : enumerate_surjections(n, deg))
                pool.push_back(u);
    CheckResult leibniz("Leibniz for ∘ᵢ, arity ≤ " + std::to_string(la) + ", degree ≤ " + std::to_string(ld));
    for (auto& u : pool)
        for (auto& v : pool)
            for (int i = 1; i <= arity(u); ++i) {
                OpElem lhs = differential(compose(Z, u, i, v));
                OpElem rhs = compose(differential(Z, u), i, op(Z, v));
                rhs.add(compose(op(Z, u), i, differential(Z, v)), sign_of(op_degree(u)));
                leibniz.expect(lhs == rhs, to_string(u) + " o_" + std::to_string(i) + " " + to_string(v));
            }
    b.add(1, "surjection operad: Leibniz rule for partial composition", leibniz);

    CheckResult coeff("coefficient of (1,2,1)∘₂b in b∘₁(1,2,1) is (−1)ⁿ, n ≤ 3");
    for (int n = 1; n <= 3; ++n) {
        Surj g = brace_generator(n);
        OpElem lhs = compose(Z, g, 1, {1, 2, 1});
        OpElem target = compose(Z, {1, 2, 1}, 2, g);
        bool ok = target.size() == 1;
        if (ok) {
            auto [w, c] = *target.begin();
            ok = lhs.coefficient(w) * c == sign_of(n);
        }
        coeff.expect(ok, "n=" + std::to_string(n) + ": " + to_string(lhs));
    }
    b.add(3, "surjection operad: brace composition coefficient", coeff);

    for (const Ring& ring : b.rings({Z, Ring::mod(2)})) {
        auto r = check_homotopy_identity(ring, la, ld, true);
        auto lit = check_homotopy_identity(ring, la, ld, false);
        r.id += ring_tag(ring);
        r.notes.push_back("literal domain (S-values occurring once): " + std::to_string(lit.failure_count) + " of " +
                          std::to_string(lit.checked) + " instances differ" +
                          (lit.failures.empty() ? "" : ", e.g. " + lit.failures.front()));
        b.add(2, "insertion homotopy: dh + hd = 1 + t", r);
    }
    return b.take();
}

inline std::vector<SuiteCheck> suite_braces(const SuiteOptions& opt)
{
    SuiteBuilder b("braces", opt);
    const int D = b.bound(opt.max_degree, 6), N = b.bound(opt.max_arity, 3);
    for (const Ring& ring : b.rings({Ring::integers()})) {
        struct Sample {
            std::string name;
            TensorHopf T;
            int out;
        };
        std::vector<Sample> samples{{"ΩT(v)", TensorHopf::primitive(ring, {2}, {"v"}), 2 * D + 2},
                                    {"ΩT(v,w)", TensorHopf::primitive(ring, {2, 3}, {"v", "w"}), D + 4},
                                    {"ΩT(a,b,c), db = a, dc = aa", nonprimitive_example(ring), D + 4}};
        for (const auto& s : samples) {
            Cobar<TensorHopf> O(s.T, {1, 2 * D + 3, 2 * D + 2});
            auto r = check_identities_exhaustive(O, augmented_basis(O, 1, D), N, s.out);
            r.id = "brace identities (d and product) on " + s.name + ", inputs of degree ≤ " + std::to_string(D) +
                   ", output ≤ " + std::to_string(s.out) + ring_tag(ring);
            b.add(4, "Kadeishvili braces on the cobar construction", r);
        }
        Cobar<TensorHopf> O(TensorHopf::primitive(ring, {2, 3}, {"v", "w"}), {1, 17, 16});
        auto pool = augmented_basis(O, 1, 3);
        const std::uint64_t s = opt.seed;
        auto a = check_action_law(O, pool, 3, 3, 300, static_cast<unsigned>(s));
        a.id = "operad action law on ΩT(v,w)" + ring_tag(ring);
        b.add(0, "operad action on the cobar construction", a, s);
        auto c = check_chain_law(O, pool, 3, 3, 300, static_cast<unsigned>(s + 1));
        c.id = "chain-map law on ΩT(v,w)" + ring_tag(ring);
        b.add(0, "operad action on the cobar construction", c, s + 1);
        auto e = check_equivariance(O, pool, 3, 3, 300, static_cast<unsigned>(s + 2));
        e.id = "equivariance on ΩT(v,w)" + ring_tag(ring);
        b.add(0, "operad action on the cobar construction", e, s + 2);
    }
    for (bool cochains : {true, false}) {
        CircleAlgebra A(Ring::integers(), cochains);
        auto r = check_identities_exhaustive(A, {0, 1}, 3, 10);
        r.id = std::string("brace identities (d and product) on ") + (cochains ? "circle cochains" : "circle cohomology");
        b.add(0, "brace identities on the circle algebras", r);
    }
    return b.take();
}

inline std::vector<SuiteCheck> suite_bar_s1(const SuiteOptions& opt)
{
    SuiteBuilder b("bar-s1", opt);
    const int N = b.bound(opt.max_degree, 5);
    const Ring ring = opt.ring.value_or(Ring::integers());
    auto t = [](int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); };
    for (bool cochains : {true, false}) {
        CircleAlgebra A(ring, cochains);
        Bar<CircleAlgebra> B(A, {-1, -1, N + 2});
        const std::string name = cochains ? "B(circle cochains)" : "B(circle cohomology)";
        CheckResult r(cochains ? "t₁tₙ = tₙt₁ = ntₙ + (n+1)tₙ₊₁ in " + name + ", n ≤ " + std::to_string(N)
                               : "t′₁t′ₙ = t′ₙt′₁ = (n+1)t′ₙ₊₁ in " + name + ", n ≤ " + std::to_string(N));
        for (int n = 1; n <= N; ++n) {
            LinComb<std::vector<int>> expected(ring);
            if (cochains)
                expected.add(t(n), n);
            expected.add(t(n + 1), n + 1);
            auto l = B.product(t(1), t(n)), rr = B.product(t(n), t(1));
            r.expect(l == expected, "n=" + std::to_string(n) + ": t1 tn = " + format_element(B, l));
            r.expect(rr == expected, "n=" + std::to_string(n) + ": tn t1 = " + format_element(B, rr));
        }
        r.id += ring_tag(ring);
        b.add(5, "Gerstenhaber-Voronov product on the bar construction of the circle", r);
    }
    {
        Bar<CircleAlgebra> BS(circle_cochains(ring), {-1, -1, 4}), BH(circle_cohomology(ring), {-1, -1, 4});
        auto s = BS.product(t(1), t(1)), h = BH.product(t(1), t(1));
        CheckResult r("t₁t₁ has a t₁ term for cochains and none for cohomology" + ring_tag(ring));
        r.expect(s.coefficient(t(1)) != 0, "cochains: t1 t1 = " + format_element(BS, s));
        r.expect(h.coefficient(t(1)) == 0, "cohomology: t1 t1 = " + format_element(BH, h));
        b.add(5, "the two Hopf algebras differ", r);
    }
    {
        const Ring Z2 = Ring::mod(2);
        LinComb<int> x(Z2, 1);
        CheckResult r("Sq⁰[x] = [x] for circle cochains, Sq⁰ = 0 for circle cohomology [zmod:2]");
        auto s = steenrod_sq(circle_cochains(Z2), x), h = steenrod_sq(circle_cohomology(Z2), x);
        r.expect(s == x && !s.is_zero(), "cochains: Sq0 x = " + s.to_string([](int k) { return k ? "x" : "1"; }));
        r.expect(h.is_zero(), "cohomology: Sq0 x = " + h.to_string([](int k) { return k ? "x" : "1"; }));
        b.add(6, "Steenrod obstruction", r);
    }
    return b.take();
}

inline std::vector<SuiteCheck> suite_cobar(const SuiteOptions& opt)
{
    SuiteBuilder b("cobar", opt);
    const int D = b.bound(opt.max_degree, 6);
    const Ring Z = opt.ring.value_or(Ring::integers());
    {
        auto T = TensorHopf::primitive(Z, {2, 3, 4}, {"v", "w", "u"});
        Cobar<TensorHopf> A(T, {1, D + 3, D + 2});
        using Words = std::vector<std::vector<int>>;
        std::vector<Words> pool{{{0}, {1}}, {{2}}};
        auto r = counit_negative_test(A, pool, {1, D, D}, {1, D, D});
        r.id = "ΩBA → A does not preserve braces for A = ΩT(v,w,u)" + ring_tag(Z);
        b.add(10, "counit negative test", r);
    }
    for (auto T : {TensorHopf::primitive(Z, {2, 3}, {"v", "w"}), nonprimitive_example(Z)}) {
        Cobar<TensorHopf> O(T, {1, D + 1, D});
        auto dd = check_d_squared(O, 0, D);
        dd.id = "d∘d = 0 on Ω" + std::string(T.generator_count() == 2 ? "T(v,w)" : "T(a,b,c)") + ring_tag(Z);
        b.add(0, "cobar construction", dd);
        auto tw = is_twisting(T, O, universal_twisting(T), 0, D);
        tw.id = "universal morphism C → ΩC is twisting on " + std::string(T.generator_count() == 2 ? "T(v,w)" : "T(a,b,c)") +
                ring_tag(Z);
        b.add(0, "cobar construction", tw);
    }
    return b.take();
}

inline std::vector<SuiteCheck> suite_hopf_twist(const SuiteOptions& opt)
{
    SuiteBuilder b("hopf-twist", opt);
    const int D = b.bound(opt.max_degree, 6);
    for (const Ring& ring : b.rings({Ring::rationals(), Ring::integers()})) {
        auto r1 = check_unit_map(TensorHopf::primitive(ring, {2}, {"v"}), D, {1, D + 3, D + 3}, {1, D + 2, D + 2});
        r1.id = "C → BΩC is a Hopf map and homology iso, C = T(v), degree ≤ " + std::to_string(D) + ring_tag(ring);
        b.add(7, "unit map", r1);
        auto r2 = check_unit_map(DividedPower(ring), D, {1, D + 3, D + 3}, {1, D + 2, D + 2});
        r2.id = "C → BΩC is a Hopf map and homology iso, C = Γ[y], degree ≤ " + std::to_string(D) + ring_tag(ring);
        b.add(7, "unit map", r2);
        for (auto T : {TensorHopf::primitive(ring, {2, 3}, {"v", "w"}), nonprimitive_example(ring)}) {
            Cobar<TensorHopf> O(T, {1, D + 5, D + 4});
            auto h = is_hopf_twisting(T, O, universal_twisting(T), 0, D + 4);
            h.id = "universal morphism is a Hopf twisting morphism on " +
                   std::string(T.generator_count() == 2 ? "T(v,w)" : "T(a,b,c)") + ring_tag(ring);
            b.add(0, "Hopf twisting morphisms", h);
        }
    }
    return b.take();
}

inline std::vector<SuiteCheck> suite_retraction(const SuiteOptions& opt)
{
    SuiteBuilder b("retraction", opt);
    const int n = b.bound(opt.generators, 3);
    if (n > 3)
        throw InvalidValue("the retraction suite supports at most 3 generators");
    RetractionBound bound;
    bound.degrees.resize(static_cast<std::size_t>(n));
    bound.max_arity = b.bound(opt.max_arity, 3);
    bound.max_op_degree = b.bound(opt.op_degree, 4);
    const int top = b.bound(opt.max_degree, 7);
    for (const Ring& ring : b.rings({Ring::integers(), Ring::mod(2)})) {
        for (auto r : verify_retraction(ring, bound)) {
            r.id += ring_tag(ring);
            b.add(8, "deformation retraction of the S2-cobar construction", r);
        }
        auto T = TensorHopf::primitive(ring, bound.degrees);
        auto pi_iota = check_pi_iota(T, 5, 3);
        pi_iota.id = "π∘ι = id" + ring_tag(ring);
        b.add(8, "deformation retraction of the S2-cobar construction", pi_iota);
        FreeS2<TensorHopf> F(T, top + 2);
        Cobar<TensorHopf> O(T, {1, top + 2, top + 2});
        for (auto r : check_ideal(F, O, 1, top)) {
            r.id += ", degree ≤ " + std::to_string(top) + ring_tag(ring);
            b.add(9, "ideal stability", r);
        }
    }
    b.add(8, "worked example", check_worked_example());
    return b.take();
}

inline std::vector<SuiteCheck> suite_ce(const SuiteOptions& opt)
{
    SuiteBuilder b("ce", opt);
    const int cutoff = b.bound(opt.max_degree, 8);
    const CEBounds bounds{cutoff, cutoff};
    std::vector<std::pair<std::string, GradedLie>> algebras;
    if (opt.input) {
        auto in = ingest(*opt.input);
        if (!std::holds_alternative<GradedLie>(in))
            throw SchemaError(*opt.input + ": the ce suite needs a file of kind lie");
        GradedLie L = std::get<GradedLie>(in);
        if (opt.ring && !(*opt.ring == L.ring()))
            throw InvalidValue("--ring differs from the ring declared in " + *opt.input);
        algebras.emplace_back(*opt.input, L);
    }
    else {
        const Ring ring = opt.ring.value_or(Ring::rationals());
        algebras.emplace_back("abelian L, |x| = 2", abelian_lie(ring, {2}));
        algebras.emplace_back("Heisenberg L", heisenberg_lie(ring));
    }
    for (const auto& [name, L] : algebras)
        for (auto r : compare_ce(L, bounds)) {
            r.id += " (" + name + ", cutoff " + std::to_string(cutoff) + ")" + ring_tag(L.ring());
            b.add(12, "Chevalley-Eilenberg comparison", r);
        }
    return b.take();
}

inline std::vector<SuiteCheck> suite_duality(const SuiteOptions& opt)
{
    SuiteBuilder b("duality", opt);
    const int D = b.bound(opt.max_degree, 6);
    const Ring ring = opt.ring.value_or(Ring::integers());
    using Words = std::vector<std::vector<int>>;
    KeyMap<Words, Words> phi = [ring](const Words& w) { return LinComb<Words>(ring, w); };
    for (auto T : {TensorHopf::primitive(ring, {2, 3}, {"v", "w"}), nonprimitive_example(ring)}) {
        const std::string name = T.generator_count() == 2 ? "T(v,w)" : "T(a,b,c)";
        {
            Cobar<TensorHopf> O(T, {1, D + 3, D + 3});
            Dual<Cobar<TensorHopf>> Od(O);
            Dual<TensorHopf> Td(T);
            Bar<Dual<TensorHopf>> B(Td, {-(D + 3), -2, D + 3});
            CheckResult dims("dimensions");
            for (int d = -D; d <= 0; ++d)
                dims.expect(B.basis(d).size() == Od.basis(d).size(), "degree " + std::to_string(d));
            auto r = merged("(ΩC)^∨ ≅ B(C^∨), C = " + name + ", degree ≥ " + std::to_string(-D) + ring_tag(ring), dims,
                            check_chain_map<Bar<Dual<TensorHopf>>, Dual<Cobar<TensorHopf>>>(B, Od, phi, -D, 0),
                            check_coalgebra_map<Bar<Dual<TensorHopf>>, Dual<Cobar<TensorHopf>>>(B, Od, phi, -D, 0));
            b.add(11, "duality", r);
        }
        {
            Bar<TensorHopf> B(T, {1, D + 3, D + 3});
            Dual<Bar<TensorHopf>> Bd(B);
            Dual<TensorHopf> Td(T);
            Cobar<Dual<TensorHopf>> O(Td, {-(D + 3), -2, D + 3});
            CheckResult dims("dimensions");
            for (int d = -D; d <= 0; ++d)
                dims.expect(O.basis(d).size() == Bd.basis(d).size(), "degree " + std::to_string(d));
            auto r = merged("(BA)^∨ ≅ Ω(A^∨), A = " + name + ", degree ≥ " + std::to_string(-D) + ring_tag(ring), dims,
                            check_chain_map<Cobar<Dual<TensorHopf>>, Dual<Bar<TensorHopf>>>(O, Bd, phi, -D, 0),
                            check_algebra_map<Cobar<Dual<TensorHopf>>, Dual<Bar<TensorHopf>>>(O, Bd, phi, -D, 0));
            b.add(11, "duality", r);
        }
    }
    return b.take();
}

}  // namespace detail

inline std::vector<SuiteCheck> run_suite(const std::string& name, const SuiteOptions& opt)
{
    if (name == "operad")
        return detail::suite_operad(opt);
    if (name == "braces")
        return detail::suite_braces(opt);
    if (name == "bar-s1")
        return detail::suite_bar_s1(opt);
    if (name == "cobar")
        return detail::suite_cobar(opt);
    if (name == "hopf-twist")
        return detail::suite_hopf_twist(opt);
    if (name == "retraction")
        return detail::suite_retraction(opt);
    if (name == "ce")
        return detail::suite_ce(opt);
    if (name == "duality")
        return detail::suite_duality(opt);
    throw InvalidValue("unknown suite '" + name + "'");
}

}  // namespace s2cobar
