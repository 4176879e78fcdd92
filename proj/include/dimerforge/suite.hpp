#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimerforge/checks.hpp"

namespace dimerforge {

// One line of a suite file: "<check> key=value ...". '#' starts a comment.
struct SuiteItem {
    std::size_t line = 0;
    CheckSpec spec;
};

struct SuiteConfig {
    std::vector<SuiteItem> items;
};

// Throws ConfigError on unknown checks, malformed pairs and file= paths that do not exist.
SuiteConfig parse_suite(const std::string& text, const std::string& base_dir = {});
SuiteConfig load_suite(const std::string& path);

struct SuiteOptions {
    unsigned jobs = 1;
    std::optional<std::uint64_t> seed;  // used by items without seed=
    bool timing = false;                // wall time lines make reports differ between runs
};

struct VerificationReport {
    struct Entry {
        SuiteItem item;
        std::uint64_t seed = 0;
        CheckOutcome outcome;
        double seconds = 0;
    };
    std::vector<Entry> entries;
    bool timing = false;

    bool pass() const;
    std::string text() const;
};

// Items run on up to jobs threads; entries keep config order.
VerificationReport run_suite(const SuiteConfig& config, const SuiteOptions& options = {});

}  // namespace dimerforge
