#include "s2cobar/io/suites.hpp"

#include <cstdio>
#include <future>
#include <map>

// One line per acceptance criterion.  Criterion 2 as literally stated (S-values
// occurring once, anywhere in u) is false; it is reported as BLOCKED together
// with the counterexample count, and the run succeeds only if the restricted
// form holds and the counterexample is still reproduced.

using namespace s2cobar;

namespace {

const std::map<int, const char*> titles{
    {1, "operad pinning: d(1,2,1) = (2,1) - (1,2), d^2 = 0 (arity <= 4, degree <= 6), Leibniz (arity <= 3, degree <= 3)"},
    {2, "homotopy law dh + hd = 1 + t, arity <= 3, degree <= 3, Z and Z/2"},
    {3, "composition coefficient (-1)^n, n = 1, 2, 3"},
    {4, "brace identities (d and product) on Omega T(v), Omega T(v,w), non-primitive example; arity <= 3, window 6"},
    {5, "S^1: t1 tn = tn t1 = n tn + (n+1) tn+1 and t'1 t'n = (n+1) t'n+1, n <= 5; t1 t1 distinguishes the two"},
    {6, "Steenrod obstruction over Z/2: Sq0[x] = [x] for cochains, 0 for cohomology"},
    {7, "unit map C -> B Omega C Hopf map and homology iso, T(v) and divided powers, degree <= 6, Q and Z"},
    {8, "retraction: dh + hd = 1 - p, h^2 = 0, hp = ph = 0, pi iota = id, worked example over Z/2"},
    {9, "ideal stability: d(I) in I and pi(I) = 0, degree <= 7"},
    {10, "counit Omega B A -> A fails brace preservation for A = Omega T(v,w,u), certified witness"},
    {11, "duality (Omega C)^v = B(C^v) and (B A)^v = Omega(A^v), degree <= 6"},
    {12, "Chevalley-Eilenberg over Q, cutoff 8: alpha twisting and Hopf twisting, betti match"},
};

}  // namespace

int main()
{
    std::vector<std::future<std::vector<SuiteCheck>>> jobs;
    const SuiteOptions opt;
    for (const auto& s : suite_names())
        jobs.push_back(std::async(std::launch::async, [s, &opt] { return run_suite(s, opt); }));
    std::map<int, std::vector<SuiteCheck>> by_criterion;
    for (auto& j : jobs)
        for (auto& c : j.get())
            if (c.criterion > 0)
                by_criterion[c.criterion].push_back(std::move(c));

    bool all_ok = true;
    for (const auto& [n, title] : titles) {
        const auto& checks = by_criterion[n];
        std::size_t instances = 0, failures = 0;
        std::string witness;
        for (const auto& c : checks) {
            instances += c.result.checked;
            failures += c.result.failure_count;
            if (witness.empty() && !c.result.failures.empty())
                witness = c.result.id + ": " + c.result.failures.front();
            if (c.result.skipped)
                ++failures, witness = c.result.id + ": skipped";
        }
        bool ok = !checks.empty() && failures == 0 && instances > 0;
        std::string extra;
        if (n == 2) {
            // literal domain, recomputed here rather than taken from the suite notes
            std::string counts, first;
            bool blocker_reproduced = true;
            for (const Ring& ring : {Ring::integers(), Ring::mod(2)}) {
                auto lit = check_homotopy_identity(ring, 3, 3, false);
                counts += (counts.empty() ? "" : ", ") + ring.name() + " " + std::to_string(lit.failure_count) + " of " +
                          std::to_string(lit.checked);
                blocker_reproduced = blocker_reproduced && lit.failure_count > 0;
                if (first.empty() && !lit.failures.empty())
                    first = lit.failures.front();
            }
            std::printf("criterion 2: BLOCKED  %s  [literal domain 'S-values occur once' is false: %s instances differ, "
                        "e.g. %s; with S an initial segment of u: %zu instances over both rings, %zu failures (%s)]\n",
                        title, counts.c_str(), first.c_str(), instances, failures, ok ? "pass" : "FAIL");
            all_ok = all_ok && ok && blocker_reproduced;
            continue;
        }
        if (n == 10)
            for (const auto& c : checks)
                for (const auto& note : c.result.notes)
                    extra += "; " + note;
        if (n == 12)
            for (const auto& c : checks)
                if (!c.result.notes.empty() && c.result.notes.front().starts_with("betti"))
                    extra += "; " + c.result.id + ": " + c.result.notes.front();
        if (n == 8)
            for (const auto& c : checks)
                for (const auto& note : c.result.notes)
                    extra += "; " + note;
        std::printf("criterion %d: %s  %s  [checks %zu, instances %zu%s%s]\n", n, ok ? "PASS" : "FAIL", title,
                    checks.size(), instances, ok ? "" : ", first failure: ", ok ? extra.c_str() : witness.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
