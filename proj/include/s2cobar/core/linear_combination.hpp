#pragma once

#include "s2cobar/core/ring.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace s2cobar {

/// Sparse formal sum of basis keys with coefficients in a Ring.
/// Zero coefficients are never stored, so structural equality is equality.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() : ring_(Ring::integers()) {}
    explicit LinearCombination(Ring ring) : ring_(ring) {}
    LinearCombination(Ring ring, const Key& key, const Scalar& coefficient = 1) : ring_(ring)
    {
        add(key, coefficient);
    }

    const Ring& ring() const { return ring_; }

    void add(const Key& key, const Scalar& coefficient)
    {
        Scalar c = ring_.reduce(coefficient);
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second = ring_.reduce(it->second + c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    void add(const LinearCombination& other, const Scalar& factor = 1)
    {
        for (const auto& [key, c] : other.terms_)
            add(key, c * factor);
    }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        add(other);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other)
    {
        add(other, -1);
        return *this;
    }
    LinearCombination& operator*=(const Scalar& factor)
    {
        Scalar f = ring_.reduce(factor);
        if (f == 0) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = ring_.reduce(it->second * f);
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Scalar& f, LinearCombination a) { return a *= f; }
    friend LinearCombination operator*(LinearCombination a, const Scalar& f) { return a *= f; }
    LinearCombination operator-() const
    {
        LinearCombination r = *this;
        r *= -1;
        return r;
    }

    bool operator==(const LinearCombination& other) const { return terms_ == other.terms_; }

    Scalar coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    /// Re-expresses the sum in the ring `target` (e.g. reduction mod p).
    LinearCombination in_ring(const Ring& target) const
    {
        LinearCombination r(target);
        for (const auto& [key, c] : terms_)
            r.add(key, c);
        return r;
    }

    template <class F>
    auto map_keys(F&& f) const
    {
        using Out = std::invoke_result_t<F, const Key&>;
        LinearCombination<Out> r(ring_);
        for (const auto& [key, c] : terms_)
            r.add(f(key), c);
        return r;
    }

    /// Applies a linear map given on basis keys.
    template <class F>
    auto apply(F&& f) const
    {
        using Out = std::invoke_result_t<F, const Key&>;
        Out r(ring_);
        for (const auto& [key, c] : terms_)
            r.add(f(key), c);
        return r;
    }

    template <class Printer>
    std::string to_string(Printer&& print_key) const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            Scalar shown = c;
            if (!first)
                out << (shown < 0 ? " - " : " + ");
            else if (shown < 0)
                out << "-";
            if (shown < 0)
                shown = -shown;
            if (shown != 1)
                out << s2cobar::to_string(shown) << "*";
            out << print_key(key);
            first = false;
        }
        return out.str();
    }

private:
    Ring ring_;
    map_type terms_;
};

template <class Key>
using LinComb = LinearCombination<Key>;

}  // namespace s2cobar
