#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ghost/padic.hpp"
#include "ghost/patterns.hpp"

namespace ghost {

// The odd branch n -> q n + d. The classical map is {3, 1}.
struct OddRule {
    std::uint32_t q = 3;
    std::int64_t d = 1;
};

enum class Branch { Even, Odd };

struct Step {
    PadicInt result;
    Branch branch;
    std::uint32_t halvings;
};

/**
 * One application of the 2-adic Collatz map.
 *
 * Even input: n/2, one bit of precision lost. Odd input: (qn+d)/2^s with
 * s = v2(qn+d), all factors of two removed at once, s bits lost.
 *
 * Throws Errc::valuation_indeterminate on a zero residue and
 * Errc::insufficient_precision when s >= precision - 1.
 */
Step t2_step(const PadicInt& n, OddRule rule = {});

/**
 * Orbit of a ghost cycle through its y odd steps.
 *
 * m[k] is the value entering odd step k (m[0] = n0, m[y] should equal n0
 * again) and step_valuations[k] the halvings that followed it.
 */
struct CycleTrace {
    ParityPattern pattern;
    std::vector<PadicInt> m;
    std::vector<std::uint32_t> step_valuations;
    std::uint32_t final_precision = 0;
    bool closed = false;

    std::uint32_t total_halvings() const;
    std::uint32_t odd_steps() const { return static_cast<std::uint32_t>(step_valuations.size()); }
    std::uint32_t total_steps() const { return odd_steps() + total_halvings(); }
};

// Runs the orbit of n0 and checks it against the pattern. Throws
// DynamicsViolation on a halving-count mismatch or if the orbit fails to
// close; requires n0.precision() > x + 1.
CycleTrace trace_orbit(const ParityPattern& p, const PadicInt& n0, OddRule rule = {});

// trace_orbit started from ghost_cycle(p, precision).n0.
CycleTrace iterate_cycle(const ParityPattern& p, std::uint32_t precision);

// True when the trace has exactly y odd steps, x halvings and closes.
// DynamicsViolation and precision errors propagate.
bool verify_periodicity(const ParityPattern& p, std::uint32_t precision);

// Classical (one halving per step) trajectory starting at n, stopping once n
// recurs, the value hits 0, or max_steps steps have been taken. The result
// includes n itself, so a cycle of length L returns L + 1 values.
std::vector<mpz_class> iterate_integer(const mpz_class& n, std::size_t max_steps,
                                       OddRule rule = {});

// Exactly `steps` classical steps from n, without stopping at a revisit.
// Needed for patterns that traverse a shorter cycle several times.
std::vector<mpz_class> classical_orbit(const mpz_class& n, std::size_t steps, OddRule rule = {});

// Parity of each of the ell classical steps the pattern prescribes
// (true = odd step).
std::vector<bool> step_parities(const ParityPattern& p);

// Whether the first ell + 1 entries of a classical trajectory follow the
// pattern's parity sequence and return to the start.
bool realizes_pattern(std::span<const mpz_class> trajectory, const ParityPattern& p);

}  // namespace ghost
