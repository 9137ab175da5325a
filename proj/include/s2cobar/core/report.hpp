#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace s2cobar {

/// Outcome of a family of exact checks: how many instances were examined and
/// witnesses for the first few failures.
struct CheckResult {
    std::string id;
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool skipped = false;

    explicit CheckResult(std::string name = {}) : id(std::move(name)) {}

    bool ok() const { return failure_count == 0; }
    void pass() { ++checked; }
    void fail(std::string witness)
    {
        ++checked;
        ++failure_count;
        if (failures.size() < 5)
            failures.push_back(std::move(witness));
    }
    void expect(bool condition, const std::string& witness)
    {
        if (condition)
            pass();
        else
            fail(witness);
    }
    void absorb(const CheckResult& other)
    {
        checked += other.checked;
        failure_count += other.failure_count;
        for (const auto& f : other.failures)
            if (failures.size() < 5)
                failures.push_back(other.id.empty() ? f : other.id + ": " + f);
    }
    std::string status() const { return skipped ? "skip" : ok() ? "pass" : "fail"; }
};

}  // namespace s2cobar
