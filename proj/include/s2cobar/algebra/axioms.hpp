#pragma once

#include "s2cobar/core/graded.hpp"
#include "s2cobar/core/report.hpp"

#include <vector>

// Degreewise axiom checks on basis elements of degrees in [lo, hi].

namespace s2cobar {

namespace detail {

template <class S>
std::vector<typename S::key_type> basis_range(const S& s, int lo, int hi)
{
    std::vector<typename S::key_type> out;
    for (int d = lo; d <= hi; ++d)
        for (auto& k : s.basis(d))
            out.push_back(k);
    return out;
}

template <class S>
std::vector<typename S::key_type> augmentation_basis(const S& s, int lo, int hi)
{
    std::vector<typename S::key_type> out;
    for (auto& k : basis_range(s, lo, hi))
        if (!s.is_unit(k))
            out.push_back(k);
    return out;
}

template <class S>
bool in_window(const S&, int d, int lo, int hi)
{
    return d >= lo && d <= hi;
}

}  // namespace detail

template <class S>
CheckResult check_d_squared(const S& s, int lo, int hi)
{
    CheckResult r("d∘d = 0");
    for (auto& k : detail::basis_range(s, lo, hi)) {
        auto dd = differential_of(s, s.differential(k));
        r.expect(dd.is_zero(), s.label(k));
    }
    return r;
}

template <class S>
CheckResult check_associativity(const S& s, int lo, int hi)
{
    CheckResult r("associativity");
    auto B = detail::augmentation_basis(s, lo, hi);
    for (auto& a : B)
        for (auto& b : B)
            for (auto& c : B) {
                int d = s.degree(a) + s.degree(b) + s.degree(c);
                if (!detail::in_window(s, d, lo, hi))
                    continue;
                auto ab_c = multiply(s, s.product(a, b), basis_element(s, c));
                auto a_bc = multiply(s, basis_element(s, a), s.product(b, c));
                r.expect(ab_c == a_bc, s.label(a) + "," + s.label(b) + "," + s.label(c));
            }
    return r;
}

template <class S>
CheckResult check_leibniz(const S& s, int lo, int hi)
{
    CheckResult r("Leibniz rule");
    auto B = detail::augmentation_basis(s, lo, hi);
    for (auto& a : B)
        for (auto& b : B) {
            if (!detail::in_window(s, s.degree(a) + s.degree(b), lo, hi))
                continue;
            auto lhs = differential_of(s, s.product(a, b));
            auto rhs = multiply(s, s.differential(a), basis_element(s, b));
            rhs.add(multiply(s, basis_element(s, a), s.differential(b)), sign_of(s.degree(a)));
            r.expect(lhs == rhs, s.label(a) + "," + s.label(b));
        }
    return r;
}

template <class S>
CheckResult check_coassociativity(const S& s, int lo, int hi)
{
    using K = typename S::key_type;
    CheckResult r("coassociativity");
    for (auto& c : detail::augmentation_basis(s, lo, hi)) {
        WordComb<K> left(s.ring()), right(s.ring());
        for (const auto& [pr, e] : s.reduced_coproduct(c)) {
            for (const auto& [q, f] : s.reduced_coproduct(pr.first))
                left.add(std::vector<K>{q.first, q.second, pr.second}, e * f);
            for (const auto& [q, f] : s.reduced_coproduct(pr.second))
                right.add(std::vector<K>{pr.first, q.first, q.second}, e * f);
        }
        r.expect(left == right, s.label(c));
    }
    return r;
}

/// Δ̄ d = (d ⊗ 1 + 1 ⊗ d) Δ̄.
template <class S>
CheckResult check_coderivation(const S& s, int lo, int hi)
{
    using K = typename S::key_type;
    CheckResult r("coproduct is a chain map");
    for (auto& c : detail::augmentation_basis(s, lo, hi)) {
        PairComb<K> lhs(s.ring()), rhs(s.ring());
        for (const auto& [k, e] : s.differential(c))
            for (const auto& [pr, f] : s.reduced_coproduct(k))
                lhs.add(pr, e * f);
        for (const auto& [pr, e] : s.reduced_coproduct(c)) {
            for (const auto& [k, f] : s.differential(pr.first))
                rhs.add({k, pr.second}, e * f);
            for (const auto& [k, f] : s.differential(pr.second))
                rhs.add({pr.first, k}, sign_of(s.degree(pr.first)) * e * f);
        }
        r.expect(lhs == rhs, s.label(c));
    }
    return r;
}

/// Δ(ab) = Δ(a)Δ(b) with (a1⊗a2)(b1⊗b2) = (-1)^{|a2||b1|} a1b1 ⊗ a2b2.
template <class S>
CheckResult check_hopf_compatibility(const S& s, int lo, int hi)
{
    using K = typename S::key_type;
    CheckResult r("Hopf compatibility");
    auto B = detail::augmentation_basis(s, lo, hi);
    for (auto& a : B)
        for (auto& b : B) {
            if (!detail::in_window(s, s.degree(a) + s.degree(b), lo, hi))
                continue;
            PairComb<K> lhs(s.ring()), rhs(s.ring());
            for (const auto& [k, e] : s.product(a, b))
                lhs.add(full_coproduct(s, k), e);
            for (const auto& [pa, e] : full_coproduct(s, a))
                for (const auto& [pb, f] : full_coproduct(s, b)) {
                    int sg = sign_of(static_cast<long long>(s.degree(pa.second)) * s.degree(pb.first));
                    for (const auto& [x, g] : s.product(pa.first, pb.first))
                        for (const auto& [y, h] : s.product(pa.second, pb.second))
                            rhs.add({x, y}, sg * e * f * g * h);
                }
            r.expect(lhs == rhs, s.label(a) + "," + s.label(b));
        }
    return r;
}

template <class S>
CheckResult check_hopf_algebra(const S& s, int lo, int hi)
{
    CheckResult r("Hopf algebra axioms");
    r.absorb(check_d_squared(s, lo, hi));
    r.absorb(check_associativity(s, lo, hi));
    r.absorb(check_leibniz(s, lo, hi));
    r.absorb(check_coassociativity(s, lo, hi));
    r.absorb(check_coderivation(s, lo, hi));
    r.absorb(check_hopf_compatibility(s, lo, hi));
    return r;
}

}  // namespace s2cobar
