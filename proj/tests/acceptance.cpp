// One line per acceptance criterion; exit status 1 when any of them fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "dimerforge/checks.hpp"
#include "dimerforge/errors.hpp"
#include "dimerforge/suite.hpp"

using namespace dimerforge;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 for no limit
    std::vector<std::string> items;  // suite lines, all of which must pass
};

const std::vector<Criterion> criteria = {
    {1, "Kasteleyn product formula on 2m x 2n grids, m,n <= 3, and 8x8", 10, {"kasteleyn max=3 eight=1"}},
    {2, "M(G+) = M(G-) on 200 random boundary path instances", 60, {"theorem21 count=200 seed=1"}},
    {3, "phi and psi mutually inverse bijections", 0, {"phi-psi count=200 seed=1 limit=10000"}},
    {4, "count of the symmetrized graph is 2^n M(G+) M(G-) and squarish", 0, {"symmetrize count=200 seed=1"}},
    {5, "trimmed squares have squarish counts (empirical)", 0, {"trimmed count=50 max_n=3 seed=1"}},
    {6, "tree to matching round trip and every outer root", 0, {"temperley count=30 seed=1"}},
    {7, "oriented edge constrained tree counts", 0, {"theorem23 count=30 seed=1"}},
    {8, "constrained matching counts for every I and transport round trip", 0, {"tea count=10 seed=1"}},
    {9, "Aztec formula, enumeration and bijection", 60, {"aztec formula=5 enumerate=3"}},
    {10, "banded forests and matchings, Channel and Bay witnesses", 0, {"tec count=10 seed=1"}},
    {11, "every simple cycle encloses an odd number of vertices", 0, {"parity count=30 seed=1"}},
    {12, "equal class weights at matching and tree level", 0, {"symmetric count=30 seed=1"}},
    {13, "uniform joint distributions and Wilson chi-square", 120,
     {"independence count=20 max_vars=4 seed=1", "wilson k=5 samples=100000 seed=1"}},
};

const char* determinism_config =
    "kasteleyn max=2\n"
    "theorem21 count=20\n"
    "phi-psi count=20\n"
    "trimmed count=10\n"
    "temperley count=5\n"
    "tea count=3\n"
    "tec count=3\n"
    "symmetric count=5\n"
    "independence count=4\n"
    "wilson k=4 samples=5000\n";

}  // namespace

int main() {
    bool all = true;
    for (const Criterion& c : criteria) {
        std::string text;
        for (const auto& line : c.items) text += line + "\n";
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            VerificationReport r = run_suite(parse_suite(text));
            pass = r.pass();
            if (!pass) detail = r.text();
        } catch (const Error& e) {
            detail = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing;
        if (c.limit_seconds > 0) {
            if (seconds >= c.limit_seconds) pass = false;
            char buf[64];
            std::snprintf(buf, sizeof buf, " (%.2f s, limit %.0f s)", seconds, c.limit_seconds);
            timing = buf;
        }
        std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << timing << "\n";
        if (!pass && !detail.empty()) std::cout << detail << "\n";
        all = all && pass;
    }

    bool same = false;
    try {
        SuiteConfig cfg = parse_suite(determinism_config);
        SuiteOptions opt;
        opt.seed = 2024;
        opt.jobs = 4;
        std::string first = run_suite(cfg, opt).text();
        std::string second = run_suite(cfg, opt).text();
        opt.jobs = 1;
        std::string serial = run_suite(cfg, opt).text();
        same = first == second && first == serial;
    } catch (const Error& e) {
        std::cout << e.what() << "\n";
    }
    std::cout << "criterion 14: " << (same ? "PASS" : "FAIL") << "  byte-identical reports across runs\n";
    all = all && same;
    return all ? 0 : 1;
}
