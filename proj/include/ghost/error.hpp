#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghost {

enum class Errc {
    invalid_precision,
    valuation_indeterminate,
    not_a_unit,
    insufficient_precision,
    invalid_pattern,
    invalid_map,
    unsupported,
    dynamics_violation,
    dimension_mismatch,
    fiber_undefined,
    inconclusive,
};

const char* to_string(Errc code) noexcept;

// Base exception for every library failure. The code is what callers branch on;
// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

enum class PatternClause {
    x_positive,
    y_positive,
    sigma_length,
    sigma_zero,
    sigma_increasing,
    sigma_below_x,
};

class PatternError : public Error {
public:
    PatternError(PatternClause clause, const std::string& what)
        : Error(Errc::invalid_pattern, what), clause_(clause) {}

    PatternClause clause() const noexcept { return clause_; }

private:
    PatternClause clause_;
};

// Raised when a ghost-cycle orbit does not follow its own parity pattern.
// The forced-valuation lemma rules this out, so seeing one means a bug.
class DynamicsViolation : public Error {
public:
    enum class Kind { valuation_mismatch, not_closed };

    DynamicsViolation(Kind kind, std::uint32_t step, std::uint32_t expected,
                      std::uint32_t observed);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t step() const noexcept { return step_; }
    std::uint32_t expected() const noexcept { return expected_; }
    std::uint32_t observed() const noexcept { return observed_; }

private:
    Kind kind_;
    std::uint32_t step_;
    std::uint32_t expected_;
    std::uint32_t observed_;
};

}  // namespace ghost
