#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperball/linalg.hpp"

namespace hyperball {

struct RunConfig {
    std::size_t dim = 8; // generation dimension (gen command)
    std::uint64_t seed = 42;
    double tol = 1e-10;      // scales every suite threshold; 1e-10 = nominal
    std::size_t count = 100; // instances per dimension per suite
};

struct FailureRecord {
    std::string digest; // deterministic instance id: <suite>/n=<dim>/#<index>
    double residual = 0.0;
    double threshold = 0.0;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    double max_residual = 0.0;
    std::vector<FailureRecord> failures;
    double wall_ms = 0.0;
    bool passed() const { return failures.empty(); }
};

struct VerifyReport {
    std::vector<SuiteResult> suites; // merged in name order
    double wall_ms = 0.0;
    bool all_passed() const;
};

std::vector<std::string> verification_suite_names();

// Runs the whole property catalog at dimensions {2, 8, 32}. Suites own
// independent seeded generators, so the report is identical with or without
// the parallel fan-out.
VerifyReport run_verification(const RunConfig& cfg, bool parallel = true);

// One line per suite plus a summary; include_timing=false gives byte-stable
// output (golden tests strip wall-clock noise).
std::string format_report(const VerifyReport& report, bool include_timing = true);

} // namespace hyperball
