#include "ghost/scan.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghost/dynamics.hpp"
#include "ghost/error.hpp"
#include "ghost/semilinear.hpp"

namespace ghost {

namespace {

GhostCycle solve(const GeneralizedMap& map, const ParityPattern& p, std::uint32_t precision) {
    return map.is_collatz() ? ghost_cycle(p, precision) : general_ghost_cycle(map, p, precision);
}

std::vector<std::uint8_t> verification_mask(std::size_t n, const ScanConfig& config) {
    if (!config.verify_dynamics) return std::vector<std::uint8_t>(n, 0);
    if (config.verify_sample == 0 || config.verify_sample >= n) {
        return std::vector<std::uint8_t>(n, 1);
    }
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> picked;
    std::mt19937_64 rng(config.seed);
    std::sample(all.begin(), all.end(), std::back_inserter(picked), config.verify_sample, rng);
    std::vector<std::uint8_t> mask(n, 0);
    for (std::size_t i : picked) mask[i] = 1;
    return mask;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs body(i) for every i in [0, n) on `jobs` threads. The first exception
// by index is rethrown after the loop so failures are deterministic too.
template <typename Body>
void parallel_for(std::size_t n, int jobs, Body body) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
    (void)jobs;
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<ParityPattern> scan_patterns(std::uint32_t ell_max) {
    std::vector<ParityPattern> out;
    for_each_by_length(ell_max, [&](const ParityPattern& p) { out.push_back(p); });
    return out;
}

ScanRecord scan_one(const ParityPattern& p, const ScanConfig& config, bool verify) {
    ScanRecord record{solve(config.map, p, config.precision), std::nullopt, std::nullopt};
    const OddRule rule = config.map.rule();
    if (verify) {
        const PadicInt start = solve(config.map, p, config.precision + p.x()).n0;
        const CycleTrace trace = trace_orbit(p, start, rule);
        record.dynamics_verified = trace.closed && trace.total_halvings() == p.x() &&
                                   trace.odd_steps() == p.y();
    }
    if (record.ghost.is_integer() && record.ghost.integer_value() >= 1) {
        const auto orbit = classical_orbit(record.ghost.integer_value(), p.ell(), rule);
        record.integer_confirmed = realizes_pattern(orbit, p);
    }
    return record;
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
    ScanSummary s;
    s.total = records.size();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ScanRecord& r = records[i];
        if (r.ghost.admissible) {
            ++s.admissible;
            auto& [adm, integral] = s.by_length[r.ghost.pattern.ell()];
            ++adm;
            if (r.ghost.is_integer()) ++integral;
        }
        if (r.dynamics_verified.value_or(false)) ++s.verified;
        if (r.ghost.is_integer()) {
            ++s.integer;
            s.integral.push_back(i);
        } else {
            ++s.ghost;
        }
    }
    return s;
}

ScanReport scan_serial(const ScanConfig& config) {
    const auto start = Clock::now();
    const std::vector<ParityPattern> patterns = scan_patterns(config.ell_max);
    const std::vector<std::uint8_t> verify = verification_mask(patterns.size(), config);
    ScanReport report{config, {}, {}, 0.0};
    report.records.reserve(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        report.records.push_back(scan_one(patterns[i], config, verify[i] != 0));
    }
    report.summary = summarize(report.records);
    report.wall_seconds = seconds_since(start);
    return report;
}

ScanReport scan_parallel(const ScanConfig& config, int jobs) {
    const auto start = Clock::now();
    const std::vector<ParityPattern> patterns = scan_patterns(config.ell_max);
    const std::vector<std::uint8_t> verify = verification_mask(patterns.size(), config);
    std::vector<std::optional<ScanRecord>> slots(patterns.size());
    parallel_for(patterns.size(), std::max(jobs, 1), [&](std::size_t i) {
        slots[i] = scan_one(patterns[i], config, verify[i] != 0);
    });
    ScanReport report{config, {}, {}, 0.0};
    report.records.reserve(slots.size());
    for (auto& slot : slots) report.records.push_back(std::move(*slot));
    report.summary = summarize(report.records);
    report.wall_seconds = seconds_since(start);
    return report;
}

namespace {

std::vector<ParityPattern> admissible_patterns(std::uint32_t ell_max, const GeneralizedMap& map) {
    std::vector<ParityPattern> out;
    for_each_by_length(ell_max, [&](const ParityPattern& p) {
        const bool ok = map.is_collatz() ? is_admissible(p) : general_is_admissible(map, p);
        if (ok) out.push_back(p);
    });
    return out;
}

}  // namespace

DensityReport density_probe_serial(const PadicInt& target, std::uint32_t ell_max,
                                   const GeneralizedMap& map) {
    DensityReport report{target, ell_max, 0, std::nullopt, 0, {}};
    for (const ParityPattern& p : admissible_patterns(ell_max, map)) {
        GhostCycle g = solve(map, p, target.precision());
        const std::uint32_t depth = agreement_depth(g.n0, target);
        ++report.histogram[depth];
        ++report.scanned;
        if (!report.best || depth > report.best_depth) {
            report.best = std::move(g);
            report.best_depth = depth;
        }
    }
    return report;
}

DensityReport density_probe_parallel(const PadicInt& target, std::uint32_t ell_max, int jobs,
                                     const GeneralizedMap& map) {
    const std::vector<ParityPattern> patterns = admissible_patterns(ell_max, map);
    std::vector<std::uint32_t> depth(patterns.size());
    parallel_for(patterns.size(), std::max(jobs, 1), [&](std::size_t i) {
        depth[i] = agreement_depth(solve(map, patterns[i], target.precision()).n0, target);
    });

    DensityReport report{target, ell_max, patterns.size(), std::nullopt, 0, {}};
    std::size_t best = patterns.size();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        ++report.histogram[depth[i]];
        if (best == patterns.size() || depth[i] > depth[best]) best = i;
    }
    if (best < patterns.size()) {
        report.best = solve(map, patterns[best], target.precision());
        report.best_depth = depth[best];
    }
    return report;
}

std::vector<std::uint8_t> dy_fiber_indicator_parallel(std::uint32_t y, std::uint32_t x,
                                                      std::uint64_t scan_bound, int jobs) {
    std::vector<std::uint8_t> seq(scan_bound);
    parallel_for(scan_bound, std::max(jobs, 1), [&](std::size_t i) {
        seq[i] = dy_membership(y, x, mpz_class(static_cast<unsigned long>(i + 1))) ? 1 : 0;
    });
    return seq;
}

std::vector<FiberRow> fiber_table(std::uint32_t y, std::uint32_t x_min, std::uint32_t x_max,
                                  std::optional<std::uint64_t> scan_bound, int jobs) {
    std::vector<FiberRow> rows;
    for (std::uint32_t x = x_min; x <= x_max; ++x) {
        if (!is_admissible(x, y)) continue;
        FiberRow row{y, x, fiber_period_exact(y, x).period, std::nullopt, false};
        if (scan_bound) {
            row.bruteforce_run = true;
            const mpz_class needed = 3 * row.period_exact;
            if (mpz_class(static_cast<unsigned long>(*scan_bound)) >= needed) {
                const auto seq = jobs > 1 ? dy_fiber_indicator_parallel(y, x, *scan_bound, jobs)
                                          : dy_fiber_indicator(y, x, *scan_bound);
                row.period_bruteforce = minimal_eventual_period(seq);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ghost
