#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimerforge/instance.hpp"
#include "dimerforge/refinement.hpp"

namespace dimerforge {

// Result of one check over one instance or a whole family of them.
struct CheckOutcome {
    bool pass = true;
    std::vector<std::string> lines;  // counts and other facts worth reporting
    std::string witness;             // first failure, empty on PASS

    void fail(const std::string& why, const std::string& witness_text = {});
    void note(const std::string& line) { lines.push_back(line); }
};

using CheckParams = std::map<std::string, std::string>;

struct CheckSpec {
    std::string name;
    CheckParams params;
    std::string base_dir;  // file= paths are relative to this

    std::string get(const std::string& key, const std::string& fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t seed(std::uint64_t fallback) const;
};

// One instance at a time. Each returns with pass == false and a witness on the first mismatch.
CheckOutcome check_kasteleyn(int max_mn, bool include_eight);
CheckOutcome check_theorem21(const InstanceFile& f);
CheckOutcome check_phi_psi(const InstanceFile& f, std::size_t limit);
CheckOutcome check_symmetrize(const InstanceFile& f);
CheckOutcome check_trimmed(int n, const std::vector<Peak>& peaks);
CheckOutcome check_temperley(const PlanarGraph& g);
CheckOutcome check_theorem23(const InstanceFile& f);
CheckOutcome check_tea(const InstanceFile& f);
CheckOutcome check_aztec(int max_formula, int max_enumerate);
CheckOutcome check_tec(const InstanceFile& f);
CheckOutcome check_parity(const PlanarGraph& g);
CheckOutcome check_symmetric(const InstanceFile& f);
CheckOutcome check_independence(const InstanceFile& f, const std::string& kind, std::uint64_t samples,
                                 std::uint64_t seed);

// The checks by name, applied to a generated family or to file=<path>.
CheckOutcome run_check(const CheckSpec& spec);
std::vector<std::string> check_names();

}  // namespace dimerforge
