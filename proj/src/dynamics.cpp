#include "ghost/dynamics.hpp"

#include <algorithm>
#include <string>

#include "ghost/cycle.hpp"
#include "ghost/error.hpp"

namespace ghost {

namespace {

PadicInt rule_image(const PadicInt& n, OddRule rule) {
    const std::uint32_t bits = n.precision();
    return PadicInt::make(static_cast<unsigned long>(rule.q), bits) * n +
           PadicInt::make(static_cast<long>(rule.d), bits);
}

}  // namespace

Step t2_step(const PadicInt& n, OddRule rule) {
    if (n.is_zero()) {
        throw Error(Errc::valuation_indeterminate,
                    "valuation-indeterminate: T2 is undefined on a zero residue");
    }
    if (!n.is_unit()) {
        return {n.shift_down(1), Branch::Even, 1};
    }
    const PadicInt image = rule_image(n, rule);
    if (image.is_zero() || v2(image) + 1 >= n.precision()) {
        throw Error(Errc::insufficient_precision,
                    "insufficient-precision: odd step exhausts the " +
                        std::to_string(n.precision()) + " known bits");
    }
    const std::uint32_t s = v2(image);
    return {image.shift_down(s), Branch::Odd, s};
}

std::uint32_t CycleTrace::total_halvings() const {
    std::uint32_t total = 0;
    for (std::uint32_t s : step_valuations) total += s;
    return total;
}

CycleTrace trace_orbit(const ParityPattern& p, const PadicInt& n0, OddRule rule) {
    if (n0.precision() <= p.x() + 1) {
        throw Error(Errc::insufficient_precision,
                    "insufficient-precision: tracing a cycle with x = " + std::to_string(p.x()) +
                        " needs more than " + std::to_string(p.x() + 1) + " bits, got " +
                        std::to_string(n0.precision()));
    }
    CycleTrace trace{p, {n0}, {}, 0, false};
    trace.m.reserve(p.y() + 1);
    trace.step_valuations.reserve(p.y());

    PadicInt current = n0;
    for (std::uint32_t k = 0; k < p.y(); ++k) {
        const std::uint32_t expected = p.gap(k + 1);
        if (!current.is_unit()) {
            // An even value would take the halving branch instead of an odd step.
            throw DynamicsViolation(DynamicsViolation::Kind::valuation_mismatch, k, expected, 0);
        }
        Step step = t2_step(current, rule);
        if (step.halvings != expected) {
            throw DynamicsViolation(DynamicsViolation::Kind::valuation_mismatch, k, expected,
                                    step.halvings);
        }
        trace.step_valuations.push_back(step.halvings);
        current = std::move(step.result);
        trace.m.push_back(current);
    }

    trace.final_precision = current.precision();
    const std::uint32_t depth = agreement_depth(current, n0);
    if (depth < trace.final_precision) {
        throw DynamicsViolation(DynamicsViolation::Kind::not_closed, p.y(), trace.final_precision,
                                depth);
    }
    trace.closed = true;
    return trace;
}

CycleTrace iterate_cycle(const ParityPattern& p, std::uint32_t precision) {
    if (precision <= p.x() + 1) {
        throw Error(Errc::insufficient_precision,
                    "insufficient-precision: iterate_cycle needs precision > x + 1 = " +
                        std::to_string(p.x() + 1));
    }
    return trace_orbit(p, ghost_cycle(p, precision).n0);
}

bool verify_periodicity(const ParityPattern& p, std::uint32_t precision) {
    const CycleTrace trace = iterate_cycle(p, precision);
    return trace.closed && trace.odd_steps() == p.y() && trace.total_halvings() == p.x() &&
           trace.total_steps() == p.ell() && trace.final_precision == precision - p.x();
}

std::vector<mpz_class> iterate_integer(const mpz_class& n, std::size_t max_steps, OddRule rule) {
    std::vector<mpz_class> out{n};
    mpz_class value = n;
    for (std::size_t i = 0; i < max_steps; ++i) {
        if (mpz_odd_p(value.get_mpz_t())) {
            value = value * rule.q + static_cast<long>(rule.d);
        } else {
            value /= 2;
        }
        out.push_back(value);
        if (value == n || value == 0) break;
    }
    return out;
}

std::vector<mpz_class> classical_orbit(const mpz_class& n, std::size_t steps, OddRule rule) {
    std::vector<mpz_class> out;
    out.reserve(steps + 1);
    out.push_back(n);
    mpz_class value = n;
    for (std::size_t i = 0; i < steps; ++i) {
        if (mpz_odd_p(value.get_mpz_t())) {
            value = value * rule.q + static_cast<long>(rule.d);
        } else {
            value /= 2;
        }
        out.push_back(value);
    }
    return out;
}

std::vector<bool> step_parities(const ParityPattern& p) {
    std::vector<bool> out;
    out.reserve(p.ell());
    for (std::uint32_t k = 1; k <= p.y(); ++k) {
        out.push_back(true);
        out.insert(out.end(), p.gap(k), false);
    }
    return out;
}

bool realizes_pattern(std::span<const mpz_class> trajectory, const ParityPattern& p) {
    const std::vector<bool> parities = step_parities(p);
    if (trajectory.size() < parities.size() + 1) return false;
    for (std::size_t i = 0; i < parities.size(); ++i) {
        const bool odd = mpz_odd_p(trajectory[i].get_mpz_t()) != 0;
        if (odd != parities[i]) return false;
    }
    return trajectory[parities.size()] == trajectory[0];
}

}  // namespace ghost
