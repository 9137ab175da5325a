#pragma once

#include "s2cobar/io/suites.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace s2cobar {

inline constexpr const char* report_schema = "s2cobar-report/1";

/// Deterministic JSON rendering: fixed key order, no timing unless supplied.
inline nlohmann::ordered_json report_json(const std::string& command, const SuiteOptions& opt,
                                          const std::vector<std::string>& suites,
                                          const std::vector<SuiteCheck>& checks,
                                          const std::map<std::string, double>* timings = nullptr)
{
    using J = nlohmann::ordered_json;
    J config = J::object();
    config["ring"] = opt.ring ? J(opt.ring->name()) : J(nullptr);
    auto optional_int = [](const std::optional<int>& v) { return v ? J(*v) : J(nullptr); };
    config["max_degree"] = optional_int(opt.max_degree);
    config["max_arity"] = optional_int(opt.max_arity);
    config["op_degree"] = optional_int(opt.op_degree);
    config["generators"] = optional_int(opt.generators);
    config["seed"] = opt.seed;
    config["input"] = opt.input ? J(*opt.input) : J(nullptr);
    config["suites"] = suites;

    J list = J::array();
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& c : checks) {
        const auto& r = c.result;
        J item = J::object();
        item["suite"] = c.suite;
        item["id"] = r.id;
        item["anchor"] = c.anchor;
        item["status"] = r.status();
        item["checked"] = r.checked;
        item["failed"] = r.failure_count;
        item["witnesses"] = r.failures;
        item["notes"] = r.notes;
        if (c.seed)
            item["seed"] = *c.seed;
        list.push_back(std::move(item));
        (r.skipped ? skip : r.ok() ? pass : fail)++;
    }

    J out = J::object();
    out["schema"] = report_schema;
    out["command"] = command;
    out["config"] = std::move(config);
    out["checks"] = std::move(list);
    out["summary"] = J{{"pass", pass}, {"fail", fail}, {"skip", skip}};
    if (timings) {
        J t = J::object();
        for (const auto& [k, v] : *timings)
            t[k] = v;
        out["timing_seconds"] = std::move(t);
    }
    return out;
}

}  // namespace s2cobar
