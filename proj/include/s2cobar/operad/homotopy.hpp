#pragma once

#include "s2cobar/core/report.hpp"
#include "s2cobar/operad/operad.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace s2cobar {

/// True when the values of S occur exactly once in u and fill its first |S| entries.
/// Under this hypothesis dh + hd = 1 + t holds for h = insertion_homotopy(j, S, -).
inline bool is_initial_segment(const std::set<int>& S, const Surj& u)
{
    if (S.size() > u.size())
        return false;
    for (std::size_t q = 0; q < S.size(); ++q)
        if (!S.count(u[q]))
            return false;
    for (int v : S)
        if (std::count(u.begin(), u.end(), v) != 1)
            return false;
    return true;
}

inline bool occurs_once(const std::set<int>& S, const Surj& u)
{
    for (int v : S)
        if (std::count(u.begin(), u.end(), v) != 1)
            return false;
    return true;
}

/// Visits every (u, j, S) with arity(u) <= max_arity, degree <= max_degree,
/// j not in S and S an initial segment of once-occurring values.  With
/// `initial_only` false, S need only consist of once-occurring values.
template <class F>
void for_each_homotopy_instance(int max_arity, int max_degree, F&& visit, bool initial_only = true)
{
    for (int n = 1; n <= max_arity; ++n)
        for (int deg = 0; deg <= max_degree; ++deg)
            for (const Surj& u : enumerate_surjections(n, deg))
                for (int j = 1; j <= n; ++j)
                    for (int mask = 0; mask < (1 << n); ++mask) {
                        if (mask & (1 << (j - 1)))
                            continue;
                        std::set<int> S;
                        for (int v = 1; v <= n; ++v)
                            if (mask & (1 << (v - 1)))
                                S.insert(v);
                        if (initial_only ? is_initial_segment(S, u) : occurs_once(S, u))
                            visit(u, j, S);
                    }
}

/// dh + hd = 1 + t for h = insertion_homotopy(j, S, -) on the instances above.
inline CheckResult check_homotopy_identity(const Ring& ring, int max_arity, int max_degree, bool initial_only = true)
{
    CheckResult r(initial_only ? "dh+hd = 1+t, S an initial segment" : "dh+hd = 1+t, S-values occurring once");
    for_each_homotopy_instance(
        max_arity, max_degree,
        [&](const Surj& u, int j, const std::set<int>& S) {
            OpElem x = op(ring, u);
            OpElem lhs = differential(insertion_homotopy(j, S, x));
            lhs += insertion_homotopy(j, S, differential(x));
            OpElem rhs = x + t_operator(j, S, x);
            std::string s;
            for (int v : S)
                s += (s.empty() ? "" : ",") + std::to_string(v);
            r.expect(lhs == rhs, "u=" + to_string(u) + " j=" + std::to_string(j) + " S={" + s + "}: dh+hd = " +
                                     to_string(lhs) + ", 1+t = " + to_string(rhs));
        },
        initial_only);
    return r;
}

}  // namespace s2cobar
