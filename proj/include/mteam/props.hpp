#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mteam {

struct PropsOptions {
    std::uint64_t seed = 1;
    /// Random samples per property; 0 selects the suite default.
    std::size_t samples = 0;
    std::size_t max_vars = 3;
    std::size_t max_rows = 4;
    std::size_t max_domain = 3;
    unsigned max_mult = 3;
    std::size_t max_depth = 4;
    /// Samples whose evaluation exceeds this many steps are counted as
    /// skipped rather than checked.
    std::uint64_t step_limit = 200000;
    bool shrink = true;
};

struct PropertyResult {
    std::string name;
    /// Reported but not part of the verdict (e.g. strict-mode variants of
    /// statements only made for lax semantics).
    bool informational = false;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    /// Minimized dump of the first failure.
    std::optional<std::string> counterexample;

    bool ok() const { return informational || failed == 0; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> results;

    bool ok() const;
};

/// flatness, locality, weakflat, unionclosure, pci-ci, lemma-rules,
/// approx-laws, reductions
const std::vector<std::string>& suite_names();

/// Deterministic for a given seed. Throws InputError for unknown suites.
SuiteReport run_suite(const std::string& suite, const PropsOptions& opts = {});

std::string format_report(const SuiteReport& report);

}  // namespace mteam
