// Structured pass/fail reports for verification runs.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace stag {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;  // human-readable witness or explanation
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string id, bool pass, std::string detail = "") {
        checks.push_back({std::move(id), pass, std::move(detail)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    /// Stable order for serialization: by check id.
    void sort_by_id() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    }
};

}  // namespace stag
