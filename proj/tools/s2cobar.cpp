#include "s2cobar/io/report_json.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>

using namespace s2cobar;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_input = 2;

struct Flags {
    std::string ring;
    int max_degree = 0, max_arity = 0, op_degree = 0, generators = 0;
    std::uint64_t seed = 1;
    std::string out, input;
    std::vector<std::string> suites;
    bool timing = false, quiet = false;
};

SuiteOptions options_from(const Flags& f)
{
    SuiteOptions o;
    if (!f.ring.empty())
        o.ring = Ring::parse(f.ring);
    auto set = [](std::optional<int>& dst, int v) {
        if (v != 0)
            dst = v;
    };
    set(o.max_degree, f.max_degree);
    set(o.max_arity, f.max_arity);
    set(o.op_degree, f.op_degree);
    set(o.generators, f.generators);
    o.seed = f.seed;
    if (!f.input.empty())
        o.input = f.input;
    return o;
}

void print_check(const SuiteCheck& c)
{
    const auto& r = c.result;
    std::string status = r.skipped ? "SKIP" : r.ok() ? "PASS" : "FAIL";
    std::printf("%s  %-10s  %s  (%zu checked", status.c_str(), c.suite.c_str(), r.id.c_str(), r.checked);
    if (r.failure_count)
        std::printf(", %zu failed", r.failure_count);
    if (c.seed)
        std::printf(", seed %llu", static_cast<unsigned long long>(*c.seed));
    std::printf(")\n");
    for (const auto& n : r.notes)
        std::printf("      note: %s\n", n.c_str());
    for (const auto& w : r.failures)
        std::printf("      witness: %s\n", w.c_str());
}

int write_report(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return exit_input;
    }
    out << text;
    return exit_pass;
}

int run_verify(const Flags& f, const std::vector<std::string>& positional)
{
    SuiteOptions opt = options_from(f);
    std::vector<std::string> suites = positional;
    suites.insert(suites.end(), f.suites.begin(), f.suites.end());
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all"))
        suites = suite_names();
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw InvalidValue("unknown suite '" + s + "'");

    using Clock = std::chrono::steady_clock;
    std::vector<std::future<std::pair<std::vector<SuiteCheck>, double>>> jobs;
    for (const auto& s : suites)
        jobs.push_back(std::async(std::launch::async, [s, &opt] {
            auto t0 = Clock::now();
            auto checks = run_suite(s, opt);
            return std::pair{std::move(checks), std::chrono::duration<double>(Clock::now() - t0).count()};
        }));

    std::vector<SuiteCheck> all;
    std::map<std::string, double> timings;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto [checks, secs] = jobs[i].get();
        timings[suites[i]] = secs;
        if (!f.quiet)
            for (const auto& c : checks)
                print_check(c);
        all.insert(all.end(), checks.begin(), checks.end());
    }

    std::size_t failed = 0;
    for (const auto& c : all)
        failed += c.result.skipped || c.result.ok() ? 0 : 1;
    if (f.timing)
        for (const auto& s : suites)
            std::printf("time  %-10s  %.2fs\n", s.c_str(), timings[s]);
    std::printf("%zu checks, %zu failed\n", all.size(), failed);

    if (!f.out.empty()) {
        auto j = report_json("verify", opt, suites, all, f.timing ? &timings : nullptr);
        if (int rc = write_report(f.out, j.dump(2) + "\n"))
            return rc;
    }
    return failed ? exit_fail : exit_pass;
}

int run_compute_bar_s1(const Flags& f, int n)
{
    if (n <= 0)
        throw InvalidValue("--n must be positive");
    const Ring ring = f.ring.empty() ? Ring::integers() : Ring::parse(f.ring);
    auto t = [](int k) { return std::vector<int>(static_cast<std::size_t>(k), 1); };
    for (bool cochains : {true, false}) {
        CircleAlgebra A(ring, cochains);
        Bar<CircleAlgebra> B(A, {-1, -1, n + 2});
        std::printf("%s over %s\n", cochains ? "B(circle cochains)" : "B(circle cohomology)", ring.name().c_str());
        auto name = [&](const std::vector<int>& w) { return (cochains ? "t" : "t'") + std::to_string(w.size()); };
        for (int k = 1; k <= n; ++k) {
            auto p = B.product(t(1), t(k));
            std::printf("  %s %s = %s\n", name(t(1)).c_str(), name(t(k)).c_str(), p.to_string(name).c_str());
        }
    }
    return exit_pass;
}

int run_check(const Flags& f, const std::vector<std::string>& files)
{
    int rc = exit_pass;
    std::vector<SuiteCheck> all;
    for (const auto& path : files) {
        Ingested in = ingest(path, false);
        std::vector<CheckResult> results;
        if (auto* A = std::get_if<PresentedAlgebra>(&in))
            results = validate_presented(*A);
        else
            results.push_back(std::get<GradedLie>(in).validate());
        for (auto& r : results) {
            r.id = path + ": " + r.id;
            SuiteCheck c{"check", "ingested structure", r, std::nullopt, 0};
            if (!f.quiet)
                print_check(c);
            if (!r.ok())
                rc = exit_fail;
            all.push_back(std::move(c));
        }
    }
    if (!f.out.empty()) {
        auto j = report_json("check", SuiteOptions{}, {}, all);
        if (int w = write_report(f.out, j.dump(2) + "\n"))
            return w;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of surjection-operad, bar/cobar and S2-cobar identities"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ring", f.ring, "coefficient ring: z, q or zmod:m");
        cmd->add_option("--out", f.out, "write a JSON report to this path");
        cmd->add_flag("--quiet", f.quiet, "only print the summary line");
    };

    std::vector<std::string> positional;
    auto* verify = app.add_subcommand("verify", "run verification suites (operad, braces, bar-s1, cobar, hopf-twist, "
                                                "retraction, ce, duality, or all)");
    verify->add_option("suites", positional, "suite names");
    verify->add_option("--suite", f.suites, "suite names")->delimiter(',');
    verify->add_option("--max-degree", f.max_degree, "degree window / cutoff")->check(CLI::PositiveNumber);
    verify->add_option("--max-arity", f.max_arity, "arity bound")->check(CLI::PositiveNumber);
    verify->add_option("--op-degree", f.op_degree, "operad degree bound")->check(CLI::PositiveNumber);
    verify->add_option("--generators", f.generators, "number of generators (retraction)")->check(CLI::PositiveNumber);
    verify->add_option("--seed", f.seed, "seed for sampled checks");
    verify->add_option("--input", f.input, "Lie-algebra file for the ce suite");
    verify->add_flag("--timing", f.timing, "report per-suite wall time (also in the JSON report)");
    add_common(verify);

    std::string what;
    int n = 5;
    auto* compute = app.add_subcommand("compute", "print a showcase computation");
    compute->add_option("what", what, "bar-s1")->required()->check(CLI::IsMember({"bar-s1"}));
    compute->add_option("--n", n, "largest n in the table");
    compute->add_option("--ring", f.ring, "coefficient ring: z, q or zmod:m");

    std::vector<std::string> files;
    auto* check = app.add_subcommand("check", "ingest structure-constant or Lie files and check their axioms");
    check->add_option("files", files, "input files")->required();
    add_common(check);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*verify)
            return run_verify(f, positional);
        if (*compute)
            return run_compute_bar_s1(f, n);
        return run_check(f, files);
    }
    catch (const AxiomViolation& e) {
        std::fprintf(stderr, "axiom violation: %s\n", e.what());
        return exit_fail;
    }
    catch (const SchemaError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return exit_input;
    }
    catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_input;
    }
}
