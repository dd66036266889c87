#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace lpadecomp {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail; // first witness on failure
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
    }
    void append(const VerificationReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

} // namespace lpadecomp
