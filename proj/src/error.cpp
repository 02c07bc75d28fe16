#include "ghost/error.hpp"

namespace ghost {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_precision: return "invalid-precision";
        case Errc::valuation_indeterminate: return "valuation-indeterminate";
        case Errc::not_a_unit: return "not-a-unit";
        case Errc::insufficient_precision: return "insufficient-precision";
        case Errc::invalid_pattern: return "invalid-pattern";
        case Errc::invalid_map: return "invalid-map";
        case Errc::unsupported: return "unsupported";
        case Errc::dynamics_violation: return "dynamics-violation";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::fiber_undefined: return "fiber-undefined";
        case Errc::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

std::string describe(DynamicsViolation::Kind kind, std::uint32_t step,
                     std::uint32_t expected, std::uint32_t observed) {
    if (kind == DynamicsViolation::Kind::not_closed) {
        return "dynamics-violation: orbit did not close (m_y and m_0 agree on " +
               std::to_string(observed) + " of " + std::to_string(expected) + " bits)";
    }
    return "dynamics-violation at odd step " + std::to_string(step) + ": expected " +
           std::to_string(expected) + " halvings, observed " + std::to_string(observed);
}

}  // namespace

DynamicsViolation::DynamicsViolation(Kind kind, std::uint32_t step, std::uint32_t expected,
                                     std::uint32_t observed)
    : Error(Errc::dynamics_violation, describe(kind, step, expected, observed)),
      kind_(kind),
      step_(step),
      expected_(expected),
      observed_(observed) {}

}  // namespace ghost
