#include "s2cobar/operad/operad.hpp"
#include "s2cobar/operad/homotopy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace s2cobar;

namespace {

const Ring Z = Ring::integers();
const Ring Z2 = Ring::mod(2);

std::vector<Surj> all_upto(int max_arity, int max_degree, int max_complexity = 0)
{
    std::vector<Surj> out;
    for (int n = 1; n <= max_arity; ++n)
        for (int d = 0; d <= max_degree; ++d)
            for (auto& u : enumerate_surjections(n, d, max_complexity))
                out.push_back(u);
    return out;
}

// Brute-force block count oracle: counts maximal constant runs in the
// restriction to {a, b}, minus one.
int complexity_oracle(const Surj& u)
{
    int best = 1;
    for (int a = 1; a <= arity(u); ++a)
        for (int b = 1; b <= arity(u); ++b) {
            if (a == b)
                continue;
            std::vector<int> restricted;
            for (int v : u)
                if (v == a || v == b)
                    restricted.push_back(v);
            int blocks = 0;
            for (std::size_t i = 0; i < restricted.size(); ++i)
                if (i == 0 || restricted[i] != restricted[i - 1])
                    ++blocks;
            best = std::max(best, blocks - 1);
        }
    return best;
}

}  // namespace

TEST(Surjection, Normalize)
{
    EXPECT_FALSE(normalize({1, 1, 2}, 2));
    EXPECT_FALSE(normalize({1, 3}, 3));
    auto u = normalize({1, 2, 1}, 2);
    ASSERT_TRUE(u);
    EXPECT_EQ(op_degree(*u), 1);
    EXPECT_THROW(normalize({1, 4}, 3), InvalidValue);
}

TEST(Surjection, Complexity)
{
    EXPECT_EQ(complexity({1, 2, 1, 2}), 3);
    EXPECT_EQ(complexity({1, 2, 3, 4, 5}), 1);
    EXPECT_EQ(complexity({1, 2, 1, 3, 1}), 2);
    for (auto& u : all_upto(4, 4))
        EXPECT_EQ(complexity(u), complexity_oracle(u)) << to_string(u);
}

TEST(Surjection, EnumerationCountsMatchBruteForce)
{
    // Count sequences over {1..n} of length n+d by filtering all words.
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d) {
            int length = n + d, total = 1, count = 0;
            for (int i = 0; i < length; ++i)
                total *= n;
            for (int code = 0; code < total; ++code) {
                Surj w;
                for (int i = 0, c = code; i < length; ++i, c /= n)
                    w.push_back(c % n + 1);
                if (normalize(w, n))
                    ++count;
            }
            EXPECT_EQ(static_cast<int>(enumerate_surjections(n, d).size()), count);
        }
}

TEST(Surjection, TextRoundTrip)
{
    Surj u = product_generator(11);
    u.push_back(1);
    EXPECT_EQ(parse_surjection(to_string(u)), u);
    EXPECT_EQ(parse_surjection("121"), (Surj{1, 2, 1}));
    EXPECT_THROW(parse_surjection("(1,1,2)"), InvalidValue);
}

TEST(Operad, DifferentialPinned)
{
    OpElem expected(Z);
    expected.add(Surj{2, 1}, 1);
    expected.add(Surj{1, 2}, -1);
    EXPECT_EQ(differential(Z, {1, 2, 1}), expected);
    EXPECT_TRUE(differential(Z, {1, 2}).is_zero());

    OpElem d = differential(Z, {1, 2, 1, 3, 1});
    EXPECT_EQ(d.size(), 3u);
    for (Surj s : {Surj{2, 1, 3, 1}, Surj{1, 2, 3, 1}, Surj{1, 2, 1, 3}})
        EXPECT_EQ(abs(d.coefficient(s)), 1) << to_string(s);
}

TEST(Operad, DifferentialSquaresToZero)
{
    for (int n = 1; n <= 4; ++n)
        for (int deg = 0; deg <= 6; ++deg)
            for (auto& u : enumerate_surjections(n, deg)) {
                OpElem dd = differential(differential(Z, u));
                ASSERT_TRUE(dd.is_zero()) << to_string(u) << " -> " << to_string(dd);
            }
}

TEST(Operad, Leibniz)
{
    auto pool = all_upto(3, 3);
    for (auto& u : pool)
        for (auto& v : pool)
            for (int i = 1; i <= arity(u); ++i) {
                OpElem lhs = differential(compose(Z, u, i, v));
                OpElem rhs = compose(differential(Z, u), i, op(Z, v));
                rhs.add(compose(op(Z, u), i, differential(Z, v)), sign_of(op_degree(u)));
                ASSERT_EQ(lhs, rhs) << to_string(u) << " o_" << i << " " << to_string(v);
            }
}

TEST(Operad, Associativity)
{
    auto pool = all_upto(3, 2);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 3000; ++trial) {
        const Surj& u = pool[pick(rng)];
        const Surj& v = pool[pick(rng)];
        const Surj& w = pool[pick(rng)];
        int r = arity(u), s = arity(v), t = arity(w);
        int i = 1 + static_cast<int>(rng() % r);
        int j = 1 + static_cast<int>(rng() % (r + s - 1));
        OpElem lhs = compose(compose(Z, u, i, v), j, op(Z, w));
        OpElem rhs(Z);
        int swap = sign_of(op_degree(v) * op_degree(w));
        if (j < i)
            rhs = swap * compose(compose(Z, u, j, w), i + t - 1, op(Z, v));
        else if (j < i + s)
            rhs = compose(op(Z, u), i, compose(Z, v, j - i + 1, w));
        else
            rhs = swap * compose(compose(Z, u, j - s + 1, w), i, op(Z, v));
        ASSERT_EQ(lhs, rhs) << to_string(u) << " " << i << " " << to_string(v) << " " << j << " " << to_string(w);
    }
}

TEST(Operad, Units)
{
    for (auto& u : all_upto(3, 2)) {
        for (int i = 1; i <= arity(u); ++i)
            EXPECT_EQ(compose(Z, u, i, {1}), op(Z, u));
        EXPECT_EQ(compose(Z, {1}, 1, u), op(Z, u));
    }
    EXPECT_EQ(compose(Z, {1, 2}, 1, {1, 2}), op(Z, {1, 2, 3}));
    EXPECT_EQ(compose(Z, {1, 2}, 2, {1, 2}), op(Z, {1, 2, 3}));
    EXPECT_THROW(compose(Z, {1, 2}, 3, {1, 2}), SlotOutOfRange);
}

TEST(Operad, ComplexityFiltration)
{
    auto pool = all_upto(3, 3);
    for (auto& u : pool)
        for (auto& v : pool)
            for (int i = 1; i <= arity(u); ++i)
                for (auto& [w, c] : compose(Z, u, i, v))
                    ASSERT_LE(complexity(w), std::max(complexity(u), complexity(v)));
    for (auto& u : pool)
        for (auto& [w, c] : differential(Z, u))
            ASSERT_LE(complexity(w), complexity(u));
}

TEST(Operad, BraceCompositionCoefficient)
{
    for (int n = 1; n <= 3; ++n) {
        Surj b = brace_generator(n);
        OpElem lhs = compose(Z, b, 1, {1, 2, 1});
        OpElem target = compose(Z, {1, 2, 1}, 2, b);
        ASSERT_EQ(target.size(), 1u);
        auto [w, c] = *target.begin();
        EXPECT_EQ(lhs.coefficient(w) * c, sign_of(n)) << "n=" << n;
    }
}

TEST(Operad, SymmetricAction)
{
    std::vector<std::vector<int>> perms3;
    std::vector<int> p{1, 2, 3};
    do
        perms3.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (int deg = 0; deg <= 3; ++deg)
        for (auto& u : enumerate_surjections(3, deg)) {
            EXPECT_EQ(sigma_act({1, 2, 3}, u), u);
            for (auto& a : perms3) {
                EXPECT_EQ(differential(Z, sigma_act(a, u)), sigma_act(a, differential(Z, u)));
                for (auto& b : perms3) {
                    std::vector<int> ab(3);
                    for (int i = 0; i < 3; ++i)
                        ab[i] = a[b[i] - 1];
                    EXPECT_EQ(sigma_act(ab, u), sigma_act(a, sigma_act(b, u)));
                }
            }
        }
    EXPECT_EQ(sigma_act({2, 1}, Surj{1, 2}), (Surj{2, 1}));
    EXPECT_THROW(sigma_act({1, 2}, Surj{1, 2, 3}), ArityMismatch);
}

TEST(Operad, InsertionHomotopyExamples)
{
    EXPECT_EQ(insertion_homotopy(1, {}, Surj{2, 1, 3, 1}), (Surj{1, 2, 1, 3, 1}));
    EXPECT_FALSE(insertion_homotopy(1, {}, Surj{1, 2, 3, 1}));
    EXPECT_EQ(insertion_homotopy(2, {1}, Surj{1, 3, 2}), (Surj{1, 2, 3, 2}));

    EXPECT_TRUE(t_operator(Z, 1, {}, {2, 1, 3, 1}).is_zero());
    EXPECT_EQ(t_operator(Z, 1, {}, {1, 2, 3}), op(Z, {1, 2, 3}, -1));
    EXPECT_EQ(t_operator(Z, 1, {}, {2, 1, 3}), op(Z, {1, 2, 3}, -1));
}

TEST(Operad, HomotopyIdentity)
{
    for (const Ring& ring : {Z, Z2}) {
        int checked = 0;
        for_each_homotopy_instance(3, 3, [&](const Surj& u, int j, const std::set<int>& S) {
            ++checked;
            OpElem x = op(ring, u);
            OpElem lhs = differential(insertion_homotopy(j, S, x));
            lhs += insertion_homotopy(j, S, differential(x));
            ASSERT_EQ(lhs, x + t_operator(j, S, x)) << to_string(u) << " j=" << j;
        });
        EXPECT_GT(checked, 500);
    }
}

TEST(Operad, HomotopyIdentityNeedsInitialSegment)
{
    // S = {2} occurs once but not at the front: both sides differ.
    OpElem x = op(Z, {1, 2, 1});
    OpElem lhs = differential(insertion_homotopy(1, {2}, x)) + insertion_homotopy(1, {2}, differential(x));
    EXPECT_TRUE(lhs.is_zero());
    EXPECT_EQ(x + t_operator(1, {2}, x), x);
}
