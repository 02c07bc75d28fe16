#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ghost {

/**
 * Structure of a hypothetical cycle: y odd steps, x halvings in total, and
 * sigma[k] = number of halvings performed before the k-th odd step.
 *
 * Construct through validate(); a ParityPattern always satisfies
 *     0 = sigma[0] < sigma[1] < ... < sigma[y-1] < x,   x, y >= 1.
 * Admissibility (2^x > 3^y) is a separate question, see is_admissible().
 */
class ParityPattern {
public:
    std::uint32_t x() const noexcept { return x_; }
    std::uint32_t y() const noexcept { return static_cast<std::uint32_t>(sigma_.size()); }
    std::span<const std::uint32_t> sigma() const noexcept { return sigma_; }

    // Cycle length x + y, counting every halving as its own step.
    std::uint32_t ell() const noexcept { return x_ + y(); }

    // Halvings between odd step k-1 and odd step k, for k = 1..y, with
    // sigma[y] taken to be x. Always >= 1.
    std::uint32_t gap(std::uint32_t k) const;
    std::vector<std::uint32_t> gaps() const;

    friend bool operator==(const ParityPattern&, const ParityPattern&) = default;

private:
    friend ParityPattern validate(std::uint32_t x, std::uint32_t y,
                                  std::vector<std::uint32_t> sigma);
    ParityPattern(std::uint32_t x, std::vector<std::uint32_t> sigma)
        : x_(x), sigma_(std::move(sigma)) {}

    std::uint32_t x_;
    std::vector<std::uint32_t> sigma_;
};

// Throws PatternError naming the first violated clause.
ParityPattern validate(std::uint32_t x, std::uint32_t y, std::vector<std::uint32_t> sigma);

// 2^x > 3^y, decided with exact integers.
bool is_admissible(const ParityPattern& p);
bool is_admissible(std::uint32_t x, std::uint32_t y);

/// Lexicographic walk over every sigma for fixed (y, x).
class PatternEnumerator {
public:
    PatternEnumerator(std::uint32_t y, std::uint32_t x);

    std::optional<ParityPattern> next();

private:
    std::uint32_t x_;
    std::uint32_t y_;
    std::vector<std::uint32_t> current_;
    bool done_;
    bool started_ = false;
};

std::vector<ParityPattern> enumerate(std::uint32_t y, std::uint32_t x);

struct TaggedPattern {
    ParityPattern pattern;
    bool admissible;
};

// Every pattern with x + y <= ell_max, ordered by ell, then y, then sigma.
// ell_max < 2 gives an empty result.
void for_each_by_length(std::uint32_t ell_max,
                        const std::function<void(const ParityPattern&)>& visit);
std::vector<TaggedPattern> enumerate_by_length(std::uint32_t ell_max);

// Number of patterns enumerate(y, x) yields: binomial(x-1, y-1).
std::uint64_t pattern_count(std::uint32_t y, std::uint32_t x);

}  // namespace ghost
