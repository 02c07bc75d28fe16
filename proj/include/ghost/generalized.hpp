#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ghost/cycle.hpp"
#include "ghost/dynamics.hpp"
#include "ghost/patterns.hpp"

namespace ghost {

/**
 * The map n -> n/2 on even n, n -> qn + d on odd n.
 *
 * q and d must both be odd (q >= 3, d != 0): then qn + d is even for odd n
 * and 2^x - q^y is odd, so every pattern has a unique 2-adic ghost cycle.
 */
class GeneralizedMap {
public:
    // Throws Errc::invalid_map on even q, q < 3, even d or d == 0.
    GeneralizedMap(std::uint32_t q, std::int64_t d);

    // Parses "q,d", e.g. "5,1" or "3,-1".
    static GeneralizedMap parse(const std::string& text);
    static GeneralizedMap collatz() { return {3, 1}; }

    std::uint32_t q() const noexcept { return q_; }
    std::int64_t d() const noexcept { return d_; }
    OddRule rule() const noexcept { return {q_, d_}; }
    bool is_collatz() const noexcept { return q_ == 3 && d_ == 1; }

    friend bool operator==(const GeneralizedMap&, const GeneralizedMap&) = default;

private:
    std::uint32_t q_;
    std::int64_t d_;
};

// sum_{k<y} q^{y-1-k} d 2^{sigma_k}; negative when d < 0.
mpz_class general_cycle_constant(const GeneralizedMap& map, const ParityPattern& p);

// Exact signed 2^x - q^y.
CycleModulus general_modulus(const GeneralizedMap& map, const ParityPattern& p);

// A positive integer cycle is possible only when C and 2^x - q^y share a
// sign: 2^x > q^y for d > 0, 2^x < q^y for d < 0.
bool general_is_admissible(const GeneralizedMap& map, const ParityPattern& p);

GhostCycle general_ghost_cycle(const GeneralizedMap& map, const ParityPattern& p,
                               std::uint32_t precision);

CycleTrace general_iterate_cycle(const GeneralizedMap& map, const ParityPattern& p,
                                 std::uint32_t precision);

std::vector<mpz_class> general_integer_oracle(const GeneralizedMap& map, const mpz_class& n,
                                              std::size_t max_steps);

}  // namespace ghost
