#pragma once

#include "gdo/core.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace gdo {

/// One named measurement against a threshold.
struct CheckResult {
    std::string name;
    Real measured = 0.0;
    Real threshold = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::int64_t runtime_ms = 0;

    bool overall() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }

    void add(std::string name, Real measured, Real threshold, bool passed, std::string detail = {})
    {
        checks.push_back({std::move(name), measured, threshold, passed, std::move(detail)});
    }

    /// Passes when measured <= threshold (NaN fails).
    void add_upper_bound(std::string name, Real measured, Real threshold, std::string detail = {})
    {
        add(std::move(name), measured, threshold, measured <= threshold, std::move(detail));
    }

    void append(const VerificationReport& other)
    {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace gdo
