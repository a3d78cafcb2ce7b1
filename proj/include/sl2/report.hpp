#pragma once

// Machine-readable verification reports.  JSON output is deterministic:
// object keys are sorted (nlohmann::json uses an ordered map) and floating
// point values serialize by shortest round-trip, so a fixed seed and config
// reproduce byte-identical reports.

#include <string>
#include <vector>

#include <json.hpp>

namespace sl2 {

struct CheckResult {
    std::string name;
    std::string identity;  // the equation or property the check verifies
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int samples = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline nlohmann::json check_to_json(const CheckResult& c) {
    return nlohmann::json{{"name", c.name},         {"identity", c.identity},
                          {"residual", c.residual}, {"tolerance", c.tolerance},
                          {"pass", c.pass},         {"samples", c.samples}};
}

inline nlohmann::json suite_to_json(const SuiteResult& s) {
    nlohmann::json checks = nlohmann::json::array();
    auto sorted = s.checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    for (const auto& c : sorted) checks.push_back(check_to_json(c));
    return nlohmann::json{{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}};
}

}  // namespace sl2
