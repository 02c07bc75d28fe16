#pragma once

// Exhaustive kernels. Each has a plain serial version, kept as the
// reference, and an OpenMP version that partitions by enumeration index and
// must produce identical results for any thread count.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ghost/cycle.hpp"
#include "ghost/generalized.hpp"
#include "ghost/padic.hpp"
#include "ghost/patterns.hpp"

namespace ghost {

struct ScanConfig {
    std::uint32_t ell_max = 12;
    std::uint32_t precision = 64;
    GeneralizedMap map = GeneralizedMap::collatz();
    bool verify_dynamics = true;
    // 0 verifies every pattern; otherwise this many, drawn with `seed`.
    std::size_t verify_sample = 0;
    std::uint64_t seed = 0;
};

struct ScanRecord {
    GhostCycle ghost;
    // Set when the orbit was traced; traces carry x extra bits so closure is
    // checked at the full scan precision.
    std::optional<bool> dynamics_verified;
    // Set for positive integer cycles: classical iteration reproduces the pattern.
    std::optional<bool> integer_confirmed;
};

struct ScanSummary {
    std::size_t total = 0;
    std::size_t admissible = 0;
    std::size_t integer = 0;
    std::size_t ghost = 0;
    std::size_t verified = 0;
    std::vector<std::size_t> integral;  // record indices
    // ell -> (admissible, admissible and integral). Exploratory statistic.
    std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> by_length;
};

struct ScanReport {
    ScanConfig config;
    std::vector<ScanRecord> records;
    ScanSummary summary;
    double wall_seconds = 0.0;
};

// Patterns in canonical order (ell, then y, then sigma).
std::vector<ParityPattern> scan_patterns(std::uint32_t ell_max);

ScanRecord scan_one(const ParityPattern& p, const ScanConfig& config, bool verify);

ScanSummary summarize(const std::vector<ScanRecord>& records);

ScanReport scan_serial(const ScanConfig& config);
ScanReport scan_parallel(const ScanConfig& config, int jobs);

struct DensityReport {
    PadicInt target;
    std::uint32_t ell_max = 0;
    std::size_t scanned = 0;
    std::optional<GhostCycle> best;
    std::uint32_t best_depth = 0;
    std::map<std::uint32_t, std::uint64_t> histogram;  // depth -> pattern count
};

// How closely admissible ghost cycles approach a target in Z_2. Exploratory:
// the agreement depth is a probe, not a density proof. Ties go to the first
// pattern in canonical order.
DensityReport density_probe_serial(const PadicInt& target, std::uint32_t ell_max,
                                   const GeneralizedMap& map = GeneralizedMap::collatz());
DensityReport density_probe_parallel(const PadicInt& target, std::uint32_t ell_max, int jobs,
                                     const GeneralizedMap& map = GeneralizedMap::collatz());

std::vector<std::uint8_t> dy_fiber_indicator_parallel(std::uint32_t y, std::uint32_t x,
                                                      std::uint64_t scan_bound, int jobs);

struct FiberRow {
    std::uint32_t y;
    std::uint32_t x;
    mpz_class period_exact;
    std::optional<std::uint64_t> period_bruteforce;  // empty when not run or inconclusive
    bool bruteforce_run = false;

    bool agree() const {
        return period_bruteforce && mpz_class(static_cast<unsigned long>(*period_bruteforce)) ==
                                        period_exact;
    }
};

// One row per admissible x in [x_min, x_max]. With a scan bound the
// brute-force oracle runs wherever the bound is large enough.
std::vector<FiberRow> fiber_table(std::uint32_t y, std::uint32_t x_min, std::uint32_t x_max,
                                  std::optional<std::uint64_t> scan_bound, int jobs = 1);

}  // namespace ghost
