#include "ghost/patterns.hpp"

#include <string>

#include <gmpxx.h>

#include "ghost/error.hpp"

namespace ghost {

std::uint32_t ParityPattern::gap(std::uint32_t k) const {
    if (k == 0 || k > y()) {
        throw std::out_of_range("gap index " + std::to_string(k) + " outside 1.." +
                                std::to_string(y()));
    }
    const std::uint32_t upper = k == y() ? x_ : sigma_[k];
    return upper - sigma_[k - 1];
}

std::vector<std::uint32_t> ParityPattern::gaps() const {
    std::vector<std::uint32_t> out;
    out.reserve(y());
    for (std::uint32_t k = 1; k <= y(); ++k) out.push_back(gap(k));
    return out;
}

ParityPattern validate(std::uint32_t x, std::uint32_t y, std::vector<std::uint32_t> sigma) {
    if (x < 1) throw PatternError(PatternClause::x_positive, "x must be >= 1");
    if (y < 1) throw PatternError(PatternClause::y_positive, "y must be >= 1");
    if (sigma.size() != y) {
        throw PatternError(PatternClause::sigma_length,
                           "sigma must have exactly y = " + std::to_string(y) + " entries, got " +
                               std::to_string(sigma.size()));
    }
    if (sigma[0] != 0) throw PatternError(PatternClause::sigma_zero, "σ₀ must be 0");
    for (std::size_t i = 1; i < sigma.size(); ++i) {
        if (sigma[i] <= sigma[i - 1]) {
            throw PatternError(PatternClause::sigma_increasing,
                               "sigma must be strictly increasing (σ" + std::to_string(i) +
                                   " = " + std::to_string(sigma[i]) + " <= σ" +
                                   std::to_string(i - 1) + " = " + std::to_string(sigma[i - 1]) +
                                   ")");
        }
    }
    if (sigma.back() >= x) {
        throw PatternError(PatternClause::sigma_below_x,
                           "last sigma entry must be < x = " + std::to_string(x));
    }
    return ParityPattern(x, std::move(sigma));
}

bool is_admissible(std::uint32_t x, std::uint32_t y) {
    mpz_class two_x;
    mpz_class three_y;
    mpz_ui_pow_ui(two_x.get_mpz_t(), 2, x);
    mpz_ui_pow_ui(three_y.get_mpz_t(), 3, y);
    return two_x > three_y;
}

bool is_admissible(const ParityPattern& p) { return is_admissible(p.x(), p.y()); }

PatternEnumerator::PatternEnumerator(std::uint32_t y, std::uint32_t x)
    : x_(x), y_(y), done_(x < 1 || y < 1 || y > x) {
    if (!done_) {
        current_.resize(y);
        for (std::uint32_t i = 0; i < y; ++i) current_[i] = i;
    }
}

std::optional<ParityPattern> PatternEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Advance the rightmost entry that still has room; sigma[0] stays 0.
        // Entry i may reach x - y + i at most.
        std::uint32_t i = y_ - 1;
        while (i >= 1 && current_[i] == x_ - y_ + i) --i;
        if (i < 1) {
            done_ = true;
            return std::nullopt;
        }
        ++current_[i];
        for (std::uint32_t j = i + 1; j < y_; ++j) current_[j] = current_[j - 1] + 1;
    }
    started_ = true;
    return validate(x_, y_, current_);
}

std::vector<ParityPattern> enumerate(std::uint32_t y, std::uint32_t x) {
    std::vector<ParityPattern> out;
    PatternEnumerator walk(y, x);
    while (auto p = walk.next()) out.push_back(std::move(*p));
    return out;
}

void for_each_by_length(std::uint32_t ell_max,
                        const std::function<void(const ParityPattern&)>& visit) {
    for (std::uint32_t ell = 2; ell <= ell_max; ++ell) {
        for (std::uint32_t y = 1; y < ell; ++y) {
            PatternEnumerator walk(y, ell - y);
            while (auto p = walk.next()) visit(*p);
        }
    }
}

std::vector<TaggedPattern> enumerate_by_length(std::uint32_t ell_max) {
    std::vector<TaggedPattern> out;
    for_each_by_length(ell_max, [&](const ParityPattern& p) {
        out.push_back({p, is_admissible(p)});
    });
    return out;
}

std::uint64_t pattern_count(std::uint32_t y, std::uint32_t x) {
    if (x < 1 || y < 1 || y > x) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), x - 1, y - 1);
    return c.get_ui();
}

}  // namespace ghost
