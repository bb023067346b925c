#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace hurwitz {

/// One verified identity: expected and actual are canonical rationals.
struct CheckRecord {
    std::string suite;
    std::string key;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::vector<CheckRecord> checks;

    void add(std::string suite, std::string key, std::string expected, std::string actual) {
        bool pass = expected == actual;
        checks.push_back({std::move(suite), std::move(key), std::move(expected), std::move(actual), pass});
    }
    void add(CheckRecord record) { checks.push_back(std::move(record)); }
    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

    bool all_passed() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
    }
};

}  // namespace hurwitz
