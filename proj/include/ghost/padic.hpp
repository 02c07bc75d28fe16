#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace ghost {

/**
 * A 2-adic integer known modulo 2^precision.
 *
 * The residue is always stored reduced into [0, 2^precision), so two values
 * compare equal exactly when both the residue and the precision match. Use
 * agrees() for the weaker "equal as far as both are known" relation.
 *
 * Binary operations truncate to the smaller of the two precisions: a digit
 * unknown in either operand is unknown in the result.
 */
class PadicInt {
public:
    // Embeds an ordinary integer (negative values wrap, so -1 becomes all ones).
    // Throws Errc::invalid_precision when precision is 0.
    static PadicInt make(const mpz_class& value, std::uint32_t precision);
    static PadicInt make(long value, std::uint32_t precision) {
        return make(mpz_class(value), precision);
    }

    const mpz_class& residue() const noexcept { return residue_; }
    std::uint32_t precision() const noexcept { return precision_; }

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return mpz_odd_p(residue_.get_mpz_t()) != 0; }

    // Same residue known to fewer bits. bits must be in [1, precision].
    PadicInt truncate(std::uint32_t bits) const;

    // Exact division by 2^shift; the low shift digits must be zero and the
    // result loses shift bits of precision.
    PadicInt shift_down(std::uint32_t shift) const;

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a);

    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.precision_ == b.precision_ && a.residue_ == b.residue_;
    }

private:
    PadicInt(mpz_class residue, std::uint32_t precision)
        : residue_(std::move(residue)), precision_(precision) {}

    static PadicInt reduced(mpz_class value, std::uint32_t precision);

    mpz_class residue_;
    std::uint32_t precision_;
};

// Residues agree modulo 2^min(a.precision, b.precision).
bool agrees(const PadicInt& a, const PadicInt& b);

// Number of low-order digits on which a and b agree, capped at the smaller
// precision.
std::uint32_t agreement_depth(const PadicInt& a, const PadicInt& b);

// Index of the lowest set digit. Throws Errc::valuation_indeterminate on a
// zero residue: all known digits are zero, so only v2 >= precision is known.
std::uint32_t v2(const PadicInt& a);

// Inverse of an odd element by Newton lifting, doubling the correct bits
// each round. Throws Errc::not_a_unit on an even residue.
PadicInt invert_unit(const PadicInt& u);

// The low n binary digits a_0 .. a_{n-1}. Throws Errc::insufficient_precision
// when n exceeds the precision.
std::vector<std::uint8_t> digits(const PadicInt& a, std::uint32_t n);

}  // namespace ghost
