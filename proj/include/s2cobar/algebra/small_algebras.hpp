#pragma once

#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"

#include <string>
#include <vector>

namespace s2cobar {

/// Divided power Hopf algebra Γ[y] on an even-degree generator: basis γ_n in
/// degree n|y|, γ_a γ_b = C(a+b, a) γ_{a+b}, Δγ_n = Σ γ_i ⊗ γ_{n-i}.
class DividedPower {
public:
    using key_type = int;

    DividedPower(Ring ring, int generator_degree = 2) : ring_(ring), deg_(generator_degree)
    {
        if (deg_ <= 0 || odd(deg_))
            throw std::invalid_argument("divided powers need a positive even generator degree");
    }

    const Ring& ring() const { return ring_; }
    int generator_degree() const { return deg_; }
    int degree(int n) const { return n * deg_; }
    int unit_key() const { return 0; }
    bool is_unit(int n) const { return n == 0; }
    LinComb<int> differential(int) const { return LinComb<int>(ring_); }

    LinComb<int> product(int a, int b) const
    {
        Integer c = 1;
        for (int i = 1; i <= b; ++i)
            c = c * (a + i) / i;
        return LinComb<int>(ring_, a + b, Scalar(c));
    }
    PairComb<int> reduced_coproduct(int n) const
    {
        PairComb<int> out(ring_);
        for (int i = 1; i < n; ++i)
            out.add({i, n - i}, 1);
        return out;
    }
    std::vector<int> basis(int d) const
    {
        if (d < 0 || d % deg_ != 0)
            return {};
        return {d / deg_};
    }
    std::string label(int n) const { return n == 0 ? "1" : "γ" + std::to_string(n); }

private:
    Ring ring_;
    int deg_;
};

/// The algebra with basis 1 (degree 0) and x (degree -1), x² = 0, zero
/// differential.  `cochain_braces` selects x{x} = -x (the cochains of the
/// simplicial circle); otherwise all braces vanish (its cohomology).
class CircleAlgebra {
public:
    using key_type = int;  // 0 = unit, 1 = x

    CircleAlgebra(Ring ring, bool cochain_braces) : ring_(ring), cochain_(cochain_braces) {}

    const Ring& ring() const { return ring_; }
    bool has_nontrivial_braces() const { return cochain_; }
    int degree(int k) const { return k == 0 ? 0 : -1; }
    int unit_key() const { return 0; }
    bool is_unit(int k) const { return k == 0; }
    LinComb<int> differential(int) const { return LinComb<int>(ring_); }
    // x is primitive
    PairComb<int> reduced_coproduct(int) const { return PairComb<int>(ring_); }
    LinComb<int> product(int a, int b) const
    {
        if (a + b >= 2)
            return LinComb<int>(ring_);
        return LinComb<int>(ring_, a + b);
    }
    LinComb<int> brace(int x, const std::vector<int>& ys) const
    {
        if (cochain_ && x == 1 && ys.size() == 1 && ys[0] == 1)
            return LinComb<int>(ring_, 1, -1);
        return LinComb<int>(ring_);
    }
    std::vector<int> basis(int d) const
    {
        if (d == 0)
            return {0};
        if (d == -1)
            return {1};
        return {};
    }
    std::string label(int k) const { return k == 0 ? "1" : "x"; }

private:
    Ring ring_;
    bool cochain_;
};

inline CircleAlgebra circle_cochains(const Ring& ring = Ring::integers()) { return CircleAlgebra(ring, true); }
inline CircleAlgebra circle_cohomology(const Ring& ring = Ring::integers()) { return CircleAlgebra(ring, false); }

/// Any algebra viewed as an S2-algebra with vanishing braces (meaningful when
/// the product is graded commutative).
template <class A>
class TrivialBraces : public A {
public:
    using key_type = typename A::key_type;
    explicit TrivialBraces(A a) : A(std::move(a)) {}
    LinComb<key_type> brace(const key_type&, const std::vector<key_type>&) const
    {
        return LinComb<key_type>(this->ring());
    }
};

}  // namespace s2cobar
