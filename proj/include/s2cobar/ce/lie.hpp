#pragma once

#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"
#include "s2cobar/core/report.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace s2cobar {

/// Connected finite-type graded Lie algebra given by structure constants on an
/// ordered basis x_0, .., x_{n-1} of positive degrees; d has degree -1.
class GradedLie {
public:
    GradedLie(Ring ring, std::vector<std::string> names, std::vector<int> degrees)
        : ring_(ring), names_(std::move(names)), degrees_(std::move(degrees))
    {
        if (names_.size() != degrees_.size())
            throw InvalidValue("Lie basis names and degrees differ in length");
        for (std::size_t i = 0; i < degrees_.size(); ++i)
            if (degrees_[i] <= 0)
                throw InvalidValue("Lie basis element " + names_[i] + " needs positive degree");
        diff_.assign(degrees_.size(), LinComb<int>(ring_));
    }

    const Ring& ring() const { return ring_; }
    int size() const { return static_cast<int>(degrees_.size()); }
    int degree(int i) const { return degrees_.at(static_cast<std::size_t>(i)); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    /// Sets [x_i, x_j] and, by antisymmetry, [x_j, x_i].
    void set_bracket(int i, int j, LinComb<int> value)
    {
        LinComb<int> other = value;
        other *= -sign_of(static_cast<long long>(degree(i)) * degree(j));
        bracket_[{i, j}] = std::move(value);
        if (i != j)
            bracket_[{j, i}] = std::move(other);
    }
    void set_differential(int i, LinComb<int> value) { diff_.at(static_cast<std::size_t>(i)) = std::move(value); }

    LinComb<int> bracket(int i, int j) const
    {
        auto it = bracket_.find({i, j});
        return it == bracket_.end() ? LinComb<int>(ring_) : it->second;
    }
    LinComb<int> bracket(const LinComb<int>& a, const LinComb<int>& b) const
    {
        LinComb<int> out(ring_);
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b)
                out.add(bracket(i, j), x * y);
        return out;
    }
    const LinComb<int>& differential(int i) const { return diff_.at(static_cast<std::size_t>(i)); }
    LinComb<int> differential(const LinComb<int>& a) const
    {
        LinComb<int> out(ring_);
        for (const auto& [i, x] : a)
            out.add(differential(i), x);
        return out;
    }

    /// Degrees of brackets and differentials, antisymmetry, Jacobi, d² = 0 and
    /// the Leibniz rule on all basis pairs and triples.
    CheckResult validate() const
    {
        CheckResult r("lie axioms");
        const int n = size();
        auto e = [&](int i) { return LinComb<int>(ring_, i); };
        for (const auto& [ij, v] : bracket_)
            for (const auto& [k, c] : v)
                r.expect(k >= 0 && k < n && degree(k) == degree(ij.first) + degree(ij.second),
                         "[" + name(ij.first) + ", " + name(ij.second) + "] has a term of the wrong degree");
        for (int i = 0; i < n; ++i) {
            for (const auto& [k, c] : differential(i))
                r.expect(k >= 0 && k < n && degree(k) == degree(i) - 1, "d" + name(i) + " has the wrong degree");
            r.expect(differential(differential(e(i))).is_zero(), "d^2 " + name(i) + " != 0");
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto ij = bracket(i, j);
                auto ji = bracket(j, i);
                ji *= -sign_of(static_cast<long long>(degree(i)) * degree(j));
                r.expect(ij == ji, "antisymmetry fails for " + name(i) + ", " + name(j));
                auto lhs = differential(ij);
                auto rhs = bracket(differential(e(i)), e(j));
                rhs.add(bracket(e(i), differential(e(j))), sign_of(degree(i)));
                r.expect(lhs == rhs, "d is not a derivation on " + name(i) + ", " + name(j));
                for (int k = 0; k < n; ++k) {
                    const long long a = degree(i), b = degree(j), c = degree(k);
                    LinComb<int> jac(ring_);
                    jac.add(bracket(e(i), bracket(j, k)), sign_of(a * c));
                    jac.add(bracket(e(j), bracket(k, i)), sign_of(b * a));
                    jac.add(bracket(e(k), bracket(i, j)), sign_of(c * b));
                    r.expect(jac.is_zero(), "Jacobi fails for " + name(i) + ", " + name(j) + ", " + name(k));
                }
            }
        return r;
    }

    void require_valid() const
    {
        auto r = validate();
        if (!r.ok())
            throw AxiomViolation(r.failures.front());
    }

private:
    Ring ring_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::map<std::pair<int, int>, LinComb<int>> bracket_;
    std::vector<LinComb<int>> diff_;
};

inline GradedLie abelian_lie(const Ring& ring, const std::vector<int>& degrees)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        names.push_back("x" + std::to_string(i + 1));
    return GradedLie(ring, names, degrees);
}

/// ⟨x, y, z⟩ with [x, y] = z.
inline GradedLie heisenberg_lie(const Ring& ring, int dx = 2, int dy = 2)
{
    GradedLie L(ring, {"x", "y", "z"}, {dx, dy, dx + dy});
    L.set_bracket(0, 1, LinComb<int>(ring, 2));
    return L;
}

/// Sorts a list of basis indices of the given degrees into nondecreasing
/// order; returns the Koszul sign, or 0 when an index of odd degree repeats.
inline int sort_graded(std::vector<int>& w, const std::function<int(int)>& degree)
{
    long long parity = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            parity += static_cast<long long>(degree(w[j - 1])) * degree(w[j]);
            std::swap(w[j - 1], w[j]);
        }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && degree(w[i]) % 2 != 0)
            return 0;
    return sign_of(parity);
}

/// Nondecreasing index sequences of total degree d in which indices of odd
/// degree occur at most once.
inline std::vector<std::vector<int>> graded_monomials(const std::function<int(int)>& degree, int n, int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i < n; ++i) {
            const int e = degree(i);
            if (e > left)
                continue;
            if (!cur.empty() && cur.back() == i && e % 2 != 0)
                continue;
            cur.push_back(i);
            self(self, i, left - e);
            cur.pop_back();
        }
    };
    if (d >= 0)
        rec(rec, 0, d);
    return out;
}

/// Universal enveloping algebra UL with the PBW basis of ordered monomials.
/// Products are straightened by rewriting the leftmost out-of-order pair:
/// x_i x_j = (-1)^{|i||j|} x_j x_i + [x_i, x_j] for i > j, x_i x_i = ½[x_i, x_i]
/// for |x_i| odd.  Generators are primitive.
class Enveloping {
public:
    using key_type = std::vector<int>;

    explicit Enveloping(GradedLie L) : L_(std::move(L)), memo_(std::make_shared<std::map<key_type, LinComb<key_type>>>())
    {
        if (!L_.ring().has_half())
            throw RingError("the enveloping algebra needs 1/2; " + L_.ring().name() + " does not have it");
        L_.require_valid();
    }

    const GradedLie& lie() const { return L_; }
    const Ring& ring() const { return L_.ring(); }
    int degree(const key_type& w) const
    {
        int d = 0;
        for (int i : w)
            d += L_.degree(i);
        return d;
    }
    key_type unit_key() const { return {}; }
    bool is_unit(const key_type& w) const { return w.empty(); }
    std::vector<key_type> basis(int d) const
    {
        return graded_monomials([this](int i) { return L_.degree(i); }, L_.size(), d);
    }
    std::string label(const key_type& w) const
    {
        if (w.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t j = i;
            while (j + 1 < w.size() && w[j + 1] == w[i])
                ++j;
            s += L_.name(w[i]);
            if (j > i)
                s += "^" + std::to_string(j - i + 1);
            i = j;
        }
        return s;
    }

    /// PBW normal form of an arbitrary word.
    LinComb<key_type> normal_form(const key_type& w) const
    {
        if (auto it = memo_->find(w); it != memo_->end())
            return it->second;
        LinComb<key_type> out(ring());
        std::size_t p = 0;
        while (p + 1 < w.size() && !(w[p] > w[p + 1] || (w[p] == w[p + 1] && L_.degree(w[p]) % 2 != 0)))
            ++p;
        if (p + 1 >= w.size()) {
            out.add(w, 1);
        } else {
            const int a = w[p], b = w[p + 1];
            auto splice = [&](const std::vector<int>& mid) {
                key_type v(w.begin(), w.begin() + static_cast<long>(p));
                v.insert(v.end(), mid.begin(), mid.end());
                v.insert(v.end(), w.begin() + static_cast<long>(p) + 2, w.end());
                return v;
            };
            const auto br = L_.bracket(a, b);
            if (a == b) {
                const Scalar half = ring().inverse(2);
                for (const auto& [k, c] : br)
                    out.add(normal_form(splice({k})), half * c);
            } else {
                out.add(normal_form(splice({b, a})), sign_of(static_cast<long long>(L_.degree(a)) * L_.degree(b)));
                for (const auto& [k, c] : br)
                    out.add(normal_form(splice({k})), c);
            }
        }
        memo_->emplace(w, out);
        return out;
    }

    LinComb<key_type> product(const key_type& a, const key_type& b) const
    {
        key_type w = a;
        w.insert(w.end(), b.begin(), b.end());
        return normal_form(w);
    }

    LinComb<key_type> differential(const key_type& w) const
    {
        LinComb<key_type> out(ring());
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [k, c] : L_.differential(w[i])) {
                key_type v = w;
                v[i] = k;
                out.add(normal_form(v), sign_of(before) * c);
            }
            before += L_.degree(w[i]);
        }
        return out;
    }

    /// Σ over proper nonempty position subsets I of ±x_I ⊗ x_J (shuffle sign).
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
                    parity += static_cast<long long>(L_.degree(w[i])) * right_degree;
                    left.push_back(w[i]);
                } else {
                    right.push_back(w[i]);
                    right_degree += L_.degree(w[i]);
                }
            }
            out.add({left, right}, sign_of(parity));
        }
        return out;
    }

    /// Associativity of the straightened product on basis triples of total
    /// degree <= hi, and the defining relations on generator pairs.
    CheckResult check_straightening(int hi) const
    {
        CheckResult r("straightening");
        std::vector<key_type> all;
        for (int d = 1; d <= hi; ++d)
            for (auto& w : basis(d))
                all.push_back(w);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (degree(a) + degree(b) > hi)
                    continue;
                for (const auto& c : all) {
                    if (degree(a) + degree(b) + degree(c) > hi)
                        continue;
                    auto lhs = multiply(*this, product(a, b), LinComb<key_type>(ring(), c));
                    auto rhs = multiply(*this, LinComb<key_type>(ring(), a), product(b, c));
                    r.expect(lhs == rhs, "(" + label(a) + ")(" + label(b) + ")(" + label(c) + ") is not joinable");
                }
            }
        for (int i = 0; i < L_.size(); ++i)
            for (int j = 0; j < L_.size(); ++j) {
                if (L_.degree(i) + L_.degree(j) > hi)
                    continue;
                auto lhs = product({i}, {j});
                lhs.add(product({j}, {i}), -sign_of(static_cast<long long>(L_.degree(i)) * L_.degree(j)));
                LinComb<key_type> rhs(ring());
                for (const auto& [k, c] : L_.bracket(i, j))
                    rhs.add(key_type{k}, c);
                r.expect(lhs == rhs, "relation fails for " + L_.name(i) + ", " + L_.name(j));
            }
        return r;
    }

    void require_confluent(int hi) const
    {
        auto r = check_straightening(hi);
        if (!r.ok())
            throw NonConfluentStraightening(r.failures.front());
    }

private:
    GradedLie L_;
    std::shared_ptr<std::map<key_type, LinComb<key_type>>> memo_;
};

}  // namespace s2cobar
