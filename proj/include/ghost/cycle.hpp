#pragma once

#include <cstdint>
#include <variant>

#include <gmpxx.h>

#include "ghost/padic.hpp"
#include "ghost/patterns.hpp"

namespace ghost {

/// 2^x - q^y for a pattern. Always odd, hence a unit in Z_2.
class CycleModulus {
public:
    explicit CycleModulus(mpz_class value);

    const mpz_class& value() const noexcept { return value_; }
    bool positive() const { return sgn(value_) > 0; }

    friend bool operator==(const CycleModulus&, const CycleModulus&) = default;

private:
    mpz_class value_;
};

struct IntegerCycle {
    mpz_class value;
    friend bool operator==(const IntegerCycle&, const IntegerCycle&) = default;
};

struct Ghost {
    friend bool operator==(const Ghost&, const Ghost&) = default;
};

using Verdict = std::variant<IntegerCycle, Ghost>;

/**
 * The unique 2-adic solution n0 of n0 * modulus = constant for one pattern,
 * together with the exact integrality verdict.
 *
 * q and d record the odd rule qn + d the cycle belongs to; the classical map
 * is (3, 1). admissible is the positive-cycle condition for that rule.
 */
struct GhostCycle {
    ParityPattern pattern;
    mpz_class constant;
    CycleModulus modulus;
    PadicInt n0;
    Verdict verdict;
    bool admissible = false;
    std::uint32_t q = 3;
    std::int64_t d = 1;

    bool is_integer() const { return std::holds_alternative<IntegerCycle>(verdict); }
    // Only meaningful when is_integer().
    const mpz_class& integer_value() const { return std::get<IntegerCycle>(verdict).value; }
};

// sum_{k<y} 3^{y-1-k} 2^{sigma_k}, evaluated by Horner's rule.
mpz_class cycle_constant(const ParityPattern& p);

// Exact signed 2^x - 3^y.
CycleModulus modulus(const ParityPattern& p);

// Exact division test: IntegerCycle(constant / modulus) or Ghost.
Verdict integrality_verdict(const mpz_class& constant, const CycleModulus& modulus);
Verdict integrality_test(const ParityPattern& p);

// modulus^{-1} * constant in Z_2, at the given precision.
PadicInt solve_cycle_equation(const mpz_class& constant, const CycleModulus& modulus,
                              std::uint32_t precision);

GhostCycle ghost_cycle(const ParityPattern& p, std::uint32_t precision);

struct CertifiedGhost {
    friend bool operator==(const CertifiedGhost&, const CertifiedGhost&) = default;
};
struct CertifiedInteger {
    mpz_class value;
    friend bool operator==(const CertifiedInteger&, const CertifiedInteger&) = default;
};
struct Inconclusive {
    friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using Certificate = std::variant<CertifiedGhost, CertifiedInteger, Inconclusive>;

/**
 * Decide integrality from the low k digits of n0.
 *
 * Any positive integer solution equals C / modulus, so it is at most
 * B = ceil(C / modulus). Once 2^k > B the integer solution, if any, is the
 * k-bit residue itself and one multiplication settles the question. Below
 * that the prefix cannot rule anything out and the answer is Inconclusive.
 *
 * Requires an admissible pattern (positive modulus); throws Errc::unsupported
 * otherwise.
 */
Certificate prefix_certificate(const ParityPattern& p, std::uint32_t k);

// ceil(C / modulus) for an admissible pattern.
mpz_class integer_solution_bound(const ParityPattern& p);

}  // namespace ghost
