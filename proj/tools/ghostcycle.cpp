// ghostcycle: command-line driver for ghost-cycle scans, fiber tables,
// non-semilinearity witnesses and the density probe.
//
// Exit status: 0 success, 1 usage, 2 dynamics violation, 3 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghost/cycle.hpp"
#include "ghost/dynamics.hpp"
#include "ghost/error.hpp"
#include "ghost/generalized.hpp"
#include "ghost/padic.hpp"
#include "ghost/patterns.hpp"
#include "ghost/records.hpp"
#include "ghost/scan.hpp"
#include "ghost/semilinear.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDynamics = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::uint32_t precision = 64;
    std::string format = "json";
    std::string out;
    int jobs = 1;
    std::uint64_t seed = 0;
};

struct PatternOptions {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::vector<std::uint32_t> sigma;
};

// Destination chosen by --out: a file when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) throw IoError("cannot open output file '" + path + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void finish() {
        stream().flush();
        if (!stream()) throw IoError("write to output failed");
    }

private:
    std::ofstream file_;
};

std::string sigma_text(const ghost::ParityPattern& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.sigma().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.sigma()[i]);
    }
    return s + ")";
}

std::string low_bits(const ghost::PadicInt& a, std::uint32_t max_bits) {
    const auto bits = ghost::digits(a, std::min(a.precision(), max_bits));
    std::string s;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i && i % 8 == 0) s += ' ';
        s += bits[i] ? '1' : '0';
    }
    return s;
}

void print_ghost_text(std::ostream& os, const ghost::GhostCycle& g, const ghost::CycleTrace& t) {
    const ghost::ParityPattern& p = g.pattern;
    if (g.q != 3 || g.d != 1) os << "map         " << g.q << "n" << (g.d > 0 ? "+" : "") << g.d << '\n';
    os << "pattern     x=" << p.x() << " y=" << p.y() << " sigma=" << sigma_text(p)
       << " ell=" << p.ell() << (g.admissible ? " admissible" : " inadmissible") << '\n';
    os << "C           " << g.constant.get_str() << '\n';
    os << "modulus     " << g.modulus.value().get_str() << '\n';
    os << "n0          " << g.n0.residue().get_str() << " (mod 2^" << g.n0.precision() << ")\n";
    os << "low bits    " << low_bits(g.n0, 64) << "  (a0 first)\n";
    os << "verdict     ";
    if (g.is_integer()) {
        os << "IntegerCycle(" << g.integer_value().get_str() << ")\n";
    } else {
        os << "Ghost\n";
    }
    os << "valuations  (";
    for (std::size_t k = 0; k < t.step_valuations.size(); ++k) {
        os << (k ? "," : "") << t.step_valuations[k];
    }
    os << ")\n";
    os << "closed      " << (t.closed ? "yes" : "no") << " at " << t.final_precision << " bits, "
       << t.total_steps() << " steps (" << t.odd_steps() << " odd, " << t.total_halvings()
       << " halvings)\n";
}

int run_ghost(const GlobalOptions& g, const PatternOptions& po, const ghost::GeneralizedMap& map) {
    const ghost::ParityPattern p = ghost::validate(po.x, po.y, po.sigma);
    const ghost::GhostCycle cycle = map.is_collatz()
                                        ? ghost::ghost_cycle(p, g.precision)
                                        : ghost::general_ghost_cycle(map, p, g.precision);
    // The trace carries x extra bits so the orbit closes at the full precision.
    const std::uint32_t trace_bits = g.precision + p.x();
    const ghost::PadicInt start = map.is_collatz()
                                      ? ghost::ghost_cycle(p, trace_bits).n0
                                      : ghost::general_ghost_cycle(map, p, trace_bits).n0;
    const ghost::CycleTrace trace = ghost::trace_orbit(p, start, map.rule());

    Output out(g.out);
    if (g.format == "text") {
        print_ghost_text(out.stream(), cycle, trace);
    } else if (g.format == "json") {
        ghost::Json j{{"ghost", ghost::to_json(cycle)},
                      {"trace", ghost::to_json(trace, cycle.admissible, map.rule())}};
        out.stream() << j.dump(2) << '\n';
    } else {
        throw UsageError("ghost supports --format json or text");
    }
    out.finish();
    return kExitOk;
}

void write_scan_csv(std::ostream& os, const std::vector<ghost::ScanRecord>& records) {
    os << "x,y,sigma,ell,admissible,C,modulus,n0_residue,n0_precision,verdict,integer_value\n";
    for (const auto& r : records) {
        const ghost::GhostCycle& g = r.ghost;
        std::string sigma;
        for (std::size_t i = 0; i < g.pattern.sigma().size(); ++i) {
            if (i) sigma += ' ';
            sigma += std::to_string(g.pattern.sigma()[i]);
        }
        os << g.pattern.x() << ',' << g.pattern.y() << ',' << sigma << ',' << g.pattern.ell()
           << ',' << (g.admissible ? "true" : "false") << ',' << g.constant.get_str() << ','
           << g.modulus.value().get_str() << ',' << g.n0.residue().get_str() << ','
           << g.n0.precision() << ',' << (g.is_integer() ? "IntegerCycle" : "Ghost") << ','
           << (g.is_integer() ? g.integer_value().get_str() : "") << '\n';
    }
}

int run_scan(const GlobalOptions& g, std::uint32_t ell_max, const ghost::GeneralizedMap& map,
             bool no_verify, std::size_t verify_sample) {
    if (ell_max < 2) throw UsageError("--ell-max must be at least 2");
    ghost::ScanConfig config;
    config.ell_max = ell_max;
    config.precision = g.precision;
    config.map = map;
    config.verify_dynamics = !no_verify;
    config.verify_sample = verify_sample;
    config.seed = g.seed;

    const ghost::ScanReport report =
        g.jobs > 1 ? ghost::scan_parallel(config, g.jobs) : ghost::scan_serial(config);

    Output out(g.out);
    if (g.format == "json") {
        ghost::write_jsonl(out.stream(), report.records);
    } else if (g.format == "csv") {
        write_scan_csv(out.stream(), report.records);
    } else if (g.format == "text") {
        for (std::size_t i : report.summary.integral) {
            const ghost::GhostCycle& c = report.records[i].ghost;
            out.stream() << "integral  x=" << c.pattern.x() << " y=" << c.pattern.y()
                         << " sigma=" << sigma_text(c.pattern) << " -> n0 = "
                         << c.integer_value().get_str() << '\n';
        }
    } else {
        throw UsageError("unknown --format '" + g.format + "'");
    }
    out.finish();
    // Summary goes to stderr so record output stays byte-identical across runs.
    std::cerr << ghost::summary_json(report).dump() << '\n';
    return kExitOk;
}

int run_fibers(const GlobalOptions& g, std::uint32_t y, std::uint32_t x_min, std::uint32_t x_max,
               std::optional<std::uint64_t> scan_bound) {
    if (y < 1) throw UsageError("--y must be at least 1");
    if (x_min > x_max) throw UsageError("--x-min must not exceed --x-max");
    const auto rows = ghost::fiber_table(y, x_min, x_max, scan_bound, g.jobs);
    Output out(g.out);
    if (g.format == "json") {
        out.stream() << ghost::to_json(rows).dump(2) << '\n';
    } else {
        ghost::write_fiber_csv(out.stream(), rows);
    }
    out.finish();
    return kExitOk;
}

int run_witness(const GlobalOptions& g, std::uint32_t y, const std::string& bound_text) {
    if (y < 1) throw UsageError("--y must be at least 1");
    mpz_class bound;
    if (bound.set_str(bound_text, 10) != 0 || bound < 1) {
        throw UsageError("--M must be a positive decimal integer");
    }
    const ghost::Witness w = ghost::nonsemilinearity_witness(y, bound);
    Output out(g.out);
    if (g.format == "text") {
        out.stream() << "y=" << y << " M=" << bound.get_str() << " -> x=" << w.x
                     << " period=" << w.period.get_str() << '\n';
    } else if (g.format == "csv") {
        out.stream() << "y,M,x,period\n"
                     << y << ',' << bound.get_str() << ',' << w.x << ',' << w.period.get_str()
                     << '\n';
    } else {
        ghost::Json j{{"y", y}, {"M", bound.get_str()}, {"x", w.x}, {"period", w.period.get_str()}};
        out.stream() << j.dump() << '\n';
    }
    out.finish();
    return kExitOk;
}

int run_density(const GlobalOptions& g, const std::string& target_text,
                std::uint32_t target_precision, std::uint32_t ell_max,
                const ghost::GeneralizedMap& map) {
    if (target_precision < 1 || target_precision > 32) {
        throw UsageError("--target-precision must be in 1..32");
    }
    mpz_class value;
    if (value.set_str(target_text, 10) != 0) throw UsageError("--target must be a decimal integer");
    const ghost::PadicInt target = ghost::PadicInt::make(value, target_precision);
    const ghost::DensityReport report =
        g.jobs > 1 ? ghost::density_probe_parallel(target, ell_max, g.jobs, map)
                   : ghost::density_probe_serial(target, ell_max, map);
    Output out(g.out);
    if (g.format == "text") {
        out.stream() << "exploratory density probe (proves nothing)\n"
                     << "target " << target.residue().get_str() << " mod 2^"
                     << target.precision() << ", " << report.scanned
                     << " admissible patterns with ell <= " << ell_max << '\n';
        if (report.best) {
            out.stream() << "best depth " << report.best_depth << " at x=" << report.best->pattern.x()
                         << " y=" << report.best->pattern.y()
                         << " sigma=" << sigma_text(report.best->pattern) << '\n';
        }
        for (const auto& [depth, count] : report.histogram) {
            out.stream() << "  depth " << depth << ": " << count << '\n';
        }
    } else {
        out.stream() << ghost::to_json(report).dump(2) << '\n';
    }
    out.finish();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ghost cycles of the 2-adic Collatz map"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--precision", global.precision, "Working precision in bits")
        ->check(CLI::Range(1u, 1u << 20));
    auto* format_opt = app.add_option("--format", global.format, "Output format: json, csv or text");
    format_opt->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", global.out, "Write output to this path instead of stdout");
    app.add_option("--jobs", global.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", global.seed, "Seed for randomized sampling");

    PatternOptions pattern;
    std::string map_text = "3,1";
    auto add_pattern = [&](CLI::App* cmd, bool required) {
        auto* x = cmd->add_option("--x", pattern.x, "Number of halvings");
        auto* y = cmd->add_option("--y", pattern.y, "Number of odd steps");
        auto* s = cmd->add_option("--sigma", pattern.sigma, "Cumulative halvings, e.g. 0,1")
                      ->delimiter(',');
        if (required) {
            x->required();
            y->required();
            s->required();
        }
    };

    auto* ghost_cmd = app.add_subcommand("ghost", "Ghost cycle and verified orbit for one pattern");
    add_pattern(ghost_cmd, true);
    ghost_cmd->add_option("--map", map_text, "Odd rule q,d for qn+d");

    std::uint32_t ell_max = 12;
    bool no_verify = false;
    std::size_t verify_sample = 0;
    auto* scan_cmd = app.add_subcommand("scan", "Every pattern with x + y <= ell-max");
    scan_cmd->add_option("--ell-max", ell_max, "Largest cycle length")->required();
    scan_cmd->add_option("--map", map_text, "Odd rule q,d for qn+d");
    scan_cmd->add_flag("--no-verify", no_verify, "Skip orbit verification");
    scan_cmd->add_option("--verify-sample", verify_sample,
                         "Verify only this many seeded-random patterns (0 = all)");

    auto* general_cmd =
        app.add_subcommand("general", "ghost or scan for a qn+d map (scan when --ell-max is given)");
    general_cmd->add_option("--map", map_text, "Odd rule q,d for qn+d")->required();
    add_pattern(general_cmd, false);
    auto* general_ell = general_cmd->add_option("--ell-max", ell_max, "Scan up to this length");
    general_cmd->add_flag("--no-verify", no_verify, "Skip orbit verification");
    general_cmd->add_option("--verify-sample", verify_sample, "Verify this many patterns");

    std::uint32_t fy = 1;
    std::uint32_t x_min = 0;
    std::uint32_t x_max = 0;
    std::optional<std::uint64_t> scan_bound;
    auto* fibers_cmd = app.add_subcommand("fibers", "Fiber periods of the divisibility predicate");
    fibers_cmd->add_option("--y", fy, "Odd-step count")->required();
    fibers_cmd->add_option("--x-min", x_min, "First x")->required();
    fibers_cmd->add_option("--x-max", x_max, "Last x")->required();
    fibers_cmd->add_option("--scan-bound", scan_bound, "Run the brute-force period oracle to C <= bound");

    std::uint32_t wy = 1;
    std::string bound_text;
    auto* witness_cmd = app.add_subcommand("witness", "Least x whose fiber period exceeds M");
    witness_cmd->add_option("--y", wy, "Odd-step count")->required();
    witness_cmd->add_option("--M", bound_text, "Claimed uniform period bound")->required();

    std::string target_text;
    std::uint32_t target_precision = 16;
    std::uint32_t probe_ell = 12;
    auto* probe_cmd =
        app.add_subcommand("density-probe", "How closely ghost cycles approach a 2-adic target");
    probe_cmd->add_option("--target", target_text, "Target residue (decimal)")->required();
    probe_cmd->add_option("--target-precision", target_precision, "Target precision in bits (<= 32)");
    probe_cmd->add_option("--ell-max", probe_ell, "Largest cycle length")->required();
    probe_cmd->add_option("--map", map_text, "Odd rule q,d for qn+d");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ghost::GeneralizedMap map = ghost::GeneralizedMap::parse(map_text);
        if (*ghost_cmd) return run_ghost(global, pattern, map);
        if (*scan_cmd) return run_scan(global, ell_max, map, no_verify, verify_sample);
        if (*general_cmd) {
            if (general_ell->count() > 0) return run_scan(global, ell_max, map, no_verify, verify_sample);
            if (pattern.sigma.empty()) throw UsageError("general needs --ell-max or --x/--y/--sigma");
            return run_ghost(global, pattern, map);
        }
        if (*fibers_cmd) {
            if (format_opt->count() == 0) global.format = "csv";
            return run_fibers(global, fy, x_min, x_max, scan_bound);
        }
        if (*witness_cmd) return run_witness(global, wy, bound_text);
        if (*probe_cmd) return run_density(global, target_text, target_precision, probe_ell, map);
    } catch (const ghost::DynamicsViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDynamics;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ghost::PatternError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ghost::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
