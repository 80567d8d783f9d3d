#pragma once

// Verification sweeps. Each suite expands into independent cases which run in
// parallel and are reported in a fixed order. Notes carry findings that are
// reported but do not decide pass/fail (e.g. a literal formula that fails
// where a corrected one holds).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twisted_hecke/flagk.hpp"

namespace th {

struct CaseResult {
    std::string id;
    bool ok = true;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseResult> cases;
    std::vector<std::string> notes;
    int failures() const;
    bool ok() const { return failures() == 0; }
};

struct SuiteOptions {
    std::string system;          // empty: the suite's default system(s)
    std::optional<Weight> slope; // fixed slope instead of sampling
    int samples = 0;             // 0: the suite's default count
    int grid = 12;               // fractional parts 0, 1/grid, ..., (grid-1)/grid
    std::uint64_t seed = 7;
    int jobs = 1;
    std::string kind;            // braid form: A, C2, G2; empty for all
    std::string wall;            // wall root: "a<i>" or an integer vector
};

const std::vector<std::string>& suite_names(); // without "all"
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

// Generic slopes with coordinates k/7 or k/11, drawn from the seeded engine.
std::vector<Weight> sample_generic_slopes(const WeylGroup& W, int count, std::mt19937_64& rng);

// Parse "a<i>" (simple root i) or a comma separated integer vector.
IVec parse_root(const RootSystem& rs, const std::string& s);

} // namespace th
