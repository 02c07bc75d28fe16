#include "ghost/semilinear.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ghost/error.hpp"
#include "ghost/patterns.hpp"

namespace ghost {

namespace {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
}

// Can residual be written as an N-combination of periods[i..]?
bool representable(const std::vector<const Vec*>& periods, std::size_t i, Vec& residual) {
    if (is_zero(residual)) return true;
    if (i == periods.size()) return false;
    const Vec& v = *periods[i];
    std::size_t used = 0;
    while (true) {
        if (representable(periods, i + 1, residual)) {
            for (std::size_t j = 0; j < v.size(); ++j) residual[j] += used * v[j];
            return true;
        }
        bool fits = true;
        for (std::size_t j = 0; j < v.size(); ++j) fits = fits && residual[j] >= v[j];
        if (!fits) break;
        for (std::size_t j = 0; j < v.size(); ++j) residual[j] -= v[j];
        ++used;
    }
    for (std::size_t j = 0; j < v.size(); ++j) residual[j] += used * v[j];
    return false;
}

mpz_class dy_period(std::uint32_t y, std::uint32_t x) {
    mpz_class two_x;
    mpz_class three_y;
    mpz_ui_pow_ui(two_x.get_mpz_t(), 2, x);
    mpz_ui_pow_ui(three_y.get_mpz_t(), 3, y);
    return two_x - three_y;
}

}  // namespace

LinearSet::LinearSet(Vec base, std::vector<Vec> periods)
    : base_(std::move(base)), periods_(std::move(periods)) {
    if (base_.empty()) {
        throw Error(Errc::dimension_mismatch, "dimension-mismatch: linear set needs d >= 1");
    }
    for (const Vec& p : periods_) {
        if (p.size() != base_.size()) {
            throw Error(Errc::dimension_mismatch,
                        "dimension-mismatch: period of dimension " + std::to_string(p.size()) +
                            " in a set of dimension " + std::to_string(base_.size()));
        }
    }
}

bool LinearSet::contains(std::span<const std::uint64_t> point) const {
    if (point.size() != dimension()) {
        throw Error(Errc::dimension_mismatch, "dimension-mismatch: point and set differ");
    }
    Vec residual(dimension());
    for (std::size_t j = 0; j < dimension(); ++j) {
        if (point[j] < base_[j]) return false;
        residual[j] = point[j] - base_[j];
    }
    std::vector<const Vec*> nonzero;
    for (const Vec& p : periods_) {
        if (!is_zero(p)) nonzero.push_back(&p);
    }
    return representable(nonzero, 0, residual);
}

SemilinearSet::SemilinearSet(std::vector<LinearSet> components)
    : components_(std::move(components)) {
    if (components_.empty()) {
        throw Error(Errc::dimension_mismatch, "dimension-mismatch: semilinear set is empty");
    }
    for (const LinearSet& c : components_) {
        if (c.dimension() != components_.front().dimension()) {
            throw Error(Errc::dimension_mismatch,
                        "dimension-mismatch: components of differing dimension");
        }
    }
}

bool membership(const SemilinearSet& s, std::span<const std::uint64_t> point) {
    if (point.size() != s.dimension()) {
        throw Error(Errc::dimension_mismatch,
                    "dimension-mismatch: point of dimension " + std::to_string(point.size()) +
                        " against a set of dimension " + std::to_string(s.dimension()));
    }
    return std::any_of(s.components().begin(), s.components().end(),
                       [&](const LinearSet& c) { return c.contains(point); });
}

bool dy_membership(std::uint32_t y, std::uint32_t x, const mpz_class& c) {
    if (c < 1 || !is_admissible(x, y)) return false;
    const mpz_class period = dy_period(y, x);
    return mpz_divisible_p(c.get_mpz_t(), period.get_mpz_t()) != 0;
}

FiberPeriodRecord fiber_period_exact(std::uint32_t y, std::uint32_t x) {
    if (!is_admissible(x, y)) {
        throw Error(Errc::fiber_undefined, "fiber-undefined: 2^" + std::to_string(x) +
                                               " <= 3^" + std::to_string(y));
    }
    return {y, x, dy_period(y, x)};
}

std::optional<std::size_t> minimal_eventual_period(std::span<const std::uint8_t> seq) {
    const std::size_t n = seq.size();
    const std::size_t start = n / 2;
    for (std::size_t p = 1; start + p < n; ++p) {
        bool periodic = true;
        for (std::size_t i = start; i + p < n && periodic; ++i) periodic = seq[i] == seq[i + p];
        if (periodic) return p;
    }
    return std::nullopt;
}

std::vector<std::uint8_t> dy_fiber_indicator(std::uint32_t y, std::uint32_t x,
                                             std::uint64_t scan_bound) {
    std::vector<std::uint8_t> seq(scan_bound);
    mpz_class c;
    for (std::uint64_t i = 0; i < scan_bound; ++i) {
        c = static_cast<unsigned long>(i + 1);
        seq[i] = dy_membership(y, x, c) ? 1 : 0;
    }
    return seq;
}

std::uint64_t fiber_period_bruteforce(std::uint32_t y, std::uint32_t x,
                                      std::uint64_t scan_bound) {
    const mpz_class period = fiber_period_exact(y, x).period;
    if (mpz_class(static_cast<unsigned long>(scan_bound)) < 3 * period) {
        throw Error(Errc::inconclusive, "inconclusive: scan bound " + std::to_string(scan_bound) +
                                            " is below 3 * (2^x - 3^y) = " +
                                            mpz_class(3 * period).get_str());
    }
    const auto detected = minimal_eventual_period(dy_fiber_indicator(y, x, scan_bound));
    if (!detected) throw Error(Errc::inconclusive, "inconclusive: no period detected");
    return *detected;
}

std::vector<std::uint8_t> fiber_indicator(const SemilinearSet& s, std::uint64_t x,
                                          std::uint64_t scan_bound) {
    if (s.dimension() != 2) {
        throw Error(Errc::dimension_mismatch, "dimension-mismatch: fibers need a 2-D set");
    }
    // Reachability over the grid [0, x] x [0, scan_bound); an unbounded
    // knapsack pass per period vector closes each component under addition.
    const std::size_t width = static_cast<std::size_t>(scan_bound);
    std::vector<std::uint8_t> fiber(width, 0);
    std::vector<std::uint8_t> grid((x + 1) * width);
    for (const LinearSet& c : s.components()) {
        const Vec& b = c.base();
        if (b[0] > x || b[1] >= scan_bound) continue;
        std::fill(grid.begin(), grid.end(), 0);
        grid[b[0] * width + b[1]] = 1;
        for (const Vec& v : c.periods()) {
            if (v[0] == 0 && v[1] == 0) continue;
            for (std::uint64_t a = 0; a + v[0] <= x; ++a) {
                for (std::uint64_t t = 0; t + v[1] < scan_bound; ++t) {
                    if (grid[a * width + t]) grid[(a + v[0]) * width + t + v[1]] = 1;
                }
            }
        }
        for (std::size_t t = 0; t < width; ++t) fiber[t] |= grid[x * width + t];
    }
    return fiber;
}

std::uint64_t fiber_eventual_period(const SemilinearSet& s, std::uint64_t x,
                                    std::uint64_t scan_bound) {
    const auto detected = minimal_eventual_period(fiber_indicator(s, x, scan_bound));
    if (!detected) {
        throw Error(Errc::inconclusive, "inconclusive: no eventual period within scan bound " +
                                            std::to_string(scan_bound));
    }
    return *detected;
}

std::uint64_t fiber_period_bound(const SemilinearSet& s) {
    std::uint64_t bound = 1;
    for (const LinearSet& c : s.components()) {
        for (const Vec& v : c.periods()) {
            if (v.size() == 2 && v[1] != 0) bound = std::lcm(bound, v[1]);
        }
    }
    return bound;
}

Witness nonsemilinearity_witness(std::uint32_t y, const mpz_class& bound) {
    for (std::uint32_t x = 1;; ++x) {
        if (!is_admissible(x, y)) continue;
        mpz_class period = dy_period(y, x);
        if (period > bound) return {x, std::move(period)};
    }
}

}  // namespace ghost
