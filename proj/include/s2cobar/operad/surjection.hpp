#pragma once

#include "s2cobar/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace s2cobar {

/// A surjection (u(1),...,u(n+d)) stored 1-valued. The arity is the largest
/// value, which is unambiguous for the surjective sequences kept here.
using Surj = std::vector<int>;

inline int arity(const Surj& u)
{
    return u.empty() ? 0 : *std::max_element(u.begin(), u.end());
}

inline int op_degree(const Surj& u)
{
    return static_cast<int>(u.size()) - arity(u);
}

inline bool is_degenerate(const Surj& u)
{
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] == u[i - 1])
            return true;
    return false;
}

/// Validated surjection onto {1..n}, or nullopt for degenerate or
/// non-surjective input.
inline std::optional<Surj> normalize(const Surj& entries, int n)
{
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
        if (v < 1 || v > n)
            throw InvalidValue("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            return std::nullopt;
    if (is_degenerate(entries))
        return std::nullopt;
    return entries;
}

inline bool is_surjection(const Surj& u)
{
    int n = arity(u);
    if (n == 0)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : u) {
        if (v < 1)
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            return false;
    return !is_degenerate(u);
}

/// Position i is a caesura when its value occurs again later.
inline std::vector<bool> caesuras(const Surj& u)
{
    std::vector<bool> c(u.size(), false);
    std::vector<bool> later(static_cast<std::size_t>(arity(u)) + 1, false);
    for (std::size_t i = u.size(); i-- > 0;) {
        c[i] = later[static_cast<std::size_t>(u[i])];
        later[static_cast<std::size_t>(u[i])] = true;
    }
    return c;
}

/// Switch count of the sequence restricted to values a and b.
inline int switches(const Surj& u, int a, int b)
{
    int last = 0, count = 0;
    for (int v : u) {
        if (v != a && v != b)
            continue;
        if (last != 0 && v != last)
            ++count;
        last = v;
    }
    return count;
}

/// Largest switch count over value pairs; u lies in S_n iff complexity(u) <= n.
inline int complexity(const Surj& u)
{
    int n = arity(u), best = 1;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            best = std::max(best, switches(u, a, b));
    return best;
}

/// All surjections of the given arity and degree, in lexicographic order.
inline std::vector<Surj> enumerate_surjections(int n, int degree, int max_complexity = 0)
{
    std::vector<Surj> out;
    if (n < 1 || degree < 0)
        return out;
    const int length = n + degree;
    Surj cur;
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    int missing = n;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == length) {
            if (missing == 0 && (max_complexity == 0 || complexity(cur) <= max_complexity))
                out.push_back(cur);
            return;
        }
        if (length - static_cast<int>(cur.size()) < missing)
            return;
        for (int v = 1; v <= n; ++v) {
            if (!cur.empty() && cur.back() == v)
                continue;
            cur.push_back(v);
            if (count[static_cast<std::size_t>(v)]++ == 0)
                --missing;
            self(self);
            if (--count[static_cast<std::size_t>(v)] == 0)
                ++missing;
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline std::string to_string(const Surj& u)
{
    std::string s = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(u[i]);
    }
    return s + ")";
}

/// Parses "(1,2,1)" or "121"-style text; the undelimited form only allows single digits.
inline Surj parse_surjection(std::string_view text)
{
    Surj u;
    std::string digits;
    bool delimited = text.find_first_of("(,") != std::string_view::npos;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            if (delimited)
                digits += ch;
            else
                u.push_back(ch - '0');
        }
        else if (ch == ',' || ch == ')') {
            if (!digits.empty())
                u.push_back(std::stoi(digits));
            digits.clear();
        }
        else if (ch != '(' && !std::isspace(static_cast<unsigned char>(ch)))
            throw InvalidValue("unexpected character in surjection '" + std::string(text) + "'");
    }
    if (!digits.empty())
        u.push_back(std::stoi(digits));
    if (!is_surjection(u))
        throw InvalidValue("not a nondegenerate surjection: '" + std::string(text) + "'");
    return u;
}

}  // namespace s2cobar
