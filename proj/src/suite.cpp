#include "dimerforge/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

namespace dimerforge {

namespace {

std::string describe_item(const SuiteItem& item, std::uint64_t seed) {
    std::string s = item.spec.name;
    bool has_seed = false;
    for (const auto& [k, v] : item.spec.params) {
        s += " " + k + "=" + v;
        has_seed = has_seed || k == "seed";
    }
    if (!has_seed) s += " seed=" + std::to_string(seed);
    return s;
}

}  // namespace

SuiteConfig parse_suite(const std::string& text, const std::string& base_dir) {
    SuiteConfig cfg;
    const auto names = check_names();
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string name;
        if (!(words >> name)) continue;
        auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw Error(ErrorKind::ConfigError, where() + "unknown check '" + name + "'");
        SuiteItem item;
        item.line = lineno;
        item.spec.name = name;
        item.spec.base_dir = base_dir;
        for (std::string kv; words >> kv;) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::ConfigError, where() + "expected key=value, got '" + kv + "'");
            item.spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        if (auto f = item.spec.params.find("file"); f != item.spec.params.end()) {
            std::filesystem::path p(f->second);
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            if (!std::filesystem::exists(p)) throw Error(ErrorKind::ConfigError, where() + "missing file " + p.string());
        }
        cfg.items.push_back(std::move(item));
    }
    return cfg;
}

SuiteConfig load_suite(const std::string& path) {
    std::string text = read_text_file(path);
    return parse_suite(text, std::filesystem::path(path).parent_path().string());
}

bool VerificationReport::pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.outcome.pass; });
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        out << "[" << i + 1 << "] " << describe_item(e.item, e.seed) << "\n";
        out << "status " << (e.outcome.pass ? "PASS" : "FAIL") << "\n";
        if (timing) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f", e.seconds);
            out << "wall-time " << buf << " s\n";
        }
        for (const std::string& l : e.outcome.lines) out << "  " << l << "\n";
        if (!e.outcome.witness.empty()) {
            out << "witness\n";
            std::istringstream w(e.outcome.witness);
            for (std::string l; std::getline(w, l);) out << "  " << l << "\n";
        }
        passed += e.outcome.pass;
    }
    out << "summary " << (pass() ? "PASS" : "FAIL") << " " << passed << "/" << entries.size() << "\n";
    return out.str();
}

VerificationReport run_suite(const SuiteConfig& config, const SuiteOptions& options) {
    VerificationReport report;
    report.timing = options.timing;
    report.entries.resize(config.items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < config.items.size();) {
            VerificationReport::Entry& e = report.entries[i];
            e.item = config.items[i];
            e.seed = e.item.spec.seed(options.seed.value_or(1));
            e.item.spec.params.emplace("seed", std::to_string(e.seed));
            auto start = std::chrono::steady_clock::now();
            try {
                e.outcome = run_check(e.item.spec);
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::ConfigError) throw;
                e.outcome = CheckOutcome{};
                e.outcome.fail(err.what());
            }
            e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(config.items.size())));
    if (jobs <= 1) {
        worker();
        return report;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t)
        threads.emplace_back([&, t] {
            try {
                worker();
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    return report;
}

}  // namespace dimerforge
