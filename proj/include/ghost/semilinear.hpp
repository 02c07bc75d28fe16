#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace ghost {

using Vec = std::vector<std::uint64_t>;

/// { base + sum lambda_i * periods[i] : lambda_i in N }.
class LinearSet {
public:
    // Throws Errc::dimension_mismatch unless every period has base's dimension
    // and that dimension is at least 1.
    LinearSet(Vec base, std::vector<Vec> periods);

    std::size_t dimension() const noexcept { return base_.size(); }
    const Vec& base() const noexcept { return base_; }
    const std::vector<Vec>& periods() const noexcept { return periods_; }

    bool contains(std::span<const std::uint64_t> point) const;

private:
    Vec base_;
    std::vector<Vec> periods_;
};

/// Finite, non-empty union of linear sets of one dimension.
class SemilinearSet {
public:
    explicit SemilinearSet(std::vector<LinearSet> components);

    std::size_t dimension() const noexcept { return components_.front().dimension(); }
    const std::vector<LinearSet>& components() const noexcept { return components_; }

private:
    std::vector<LinearSet> components_;
};

// Bounded search over coefficient vectors; zero periods are dropped first so
// every remaining period strictly shrinks the residual.
bool membership(const SemilinearSet& s, std::span<const std::uint64_t> point);

// (x, C) in D_y: 2^x > 3^y, C >= 1 and (2^x - 3^y) | C.
bool dy_membership(std::uint32_t y, std::uint32_t x, const mpz_class& c);

struct FiberPeriodRecord {
    std::uint32_t y;
    std::uint32_t x;
    mpz_class period;
};

// Exact period 2^x - 3^y of the fiber of D_y at x. Throws
// Errc::fiber_undefined when 2^x <= 3^y.
FiberPeriodRecord fiber_period_exact(std::uint32_t y, std::uint32_t x);

// Smallest p such that seq[i] == seq[i + p] over the whole second half of the
// window, or nullopt if no such p leaves at least one comparison.
std::optional<std::size_t> minimal_eventual_period(std::span<const std::uint8_t> seq);

// Membership indicator of D_y's fiber at x for C = 1 .. scan_bound.
std::vector<std::uint8_t> dy_fiber_indicator(std::uint32_t y, std::uint32_t x,
                                             std::uint64_t scan_bound);

// Period of the D_y fiber at x found by testing candidate periods against the
// indicator, independently of the closed form. Needs scan_bound >= 3 (2^x - 3^y);
// throws Errc::inconclusive below that or if nothing is detected.
std::uint64_t fiber_period_bruteforce(std::uint32_t y, std::uint32_t x,
                                      std::uint64_t scan_bound);

// Indicator of {v : (x, v) in s} for v in [0, scan_bound). s must be 2-D.
std::vector<std::uint8_t> fiber_indicator(const SemilinearSet& s, std::uint64_t x,
                                          std::uint64_t scan_bound);

// Minimal eventual period of the fiber at x, detected over [0, scan_bound).
// Throws Errc::inconclusive when no period is detected.
std::uint64_t fiber_eventual_period(const SemilinearSet& s, std::uint64_t x,
                                    std::uint64_t scan_bound);

// lcm of the nonzero second coordinates of every period vector (1 if none).
// Every fiber period of a 2-D semilinear set divides it.
std::uint64_t fiber_period_bound(const SemilinearSet& s);

struct Witness {
    std::uint32_t x;
    mpz_class period;
};

// Least admissible x whose fiber period 2^x - 3^y exceeds bound.
Witness nonsemilinearity_witness(std::uint32_t y, const mpz_class& bound);

}  // namespace ghost
