#include "ghost/padic.hpp"

#include <algorithm>
#include <string>

#include "ghost/error.hpp"

namespace ghost {

namespace {

void reduce_in_place(mpz_class& value, std::uint32_t precision) {
    // fdiv keeps the remainder non-negative for negative inputs.
    mpz_fdiv_r_2exp(value.get_mpz_t(), value.get_mpz_t(), precision);
}

}  // namespace

PadicInt PadicInt::reduced(mpz_class value, std::uint32_t precision) {
    reduce_in_place(value, precision);
    return PadicInt(std::move(value), precision);
}

PadicInt PadicInt::make(const mpz_class& value, std::uint32_t precision) {
    if (precision == 0) {
        throw Error(Errc::invalid_precision, "invalid-precision: precision must be at least 1 bit");
    }
    return reduced(value, precision);
}

PadicInt PadicInt::truncate(std::uint32_t bits) const {
    if (bits == 0 || bits > precision_) {
        throw Error(Errc::invalid_precision,
                    "invalid-precision: cannot truncate " + std::to_string(precision_) +
                        "-bit value to " + std::to_string(bits) + " bits");
    }
    return reduced(residue_, bits);
}

PadicInt PadicInt::shift_down(std::uint32_t shift) const {
    if (shift >= precision_) {
        throw Error(Errc::insufficient_precision,
                    "insufficient-precision: dividing by 2^" + std::to_string(shift) +
                        " exhausts " + std::to_string(precision_) + " bits");
    }
    if (shift > 0 && !is_zero() && v2(*this) < shift) {
        throw Error(Errc::unsupported, "shift_down: value is not divisible by 2^" +
                                          std::to_string(shift));
    }
    mpz_class out;
    mpz_fdiv_q_2exp(out.get_mpz_t(), residue_.get_mpz_t(), shift);
    return PadicInt(std::move(out), precision_ - shift);
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    return PadicInt::reduced(a.residue_ + b.residue_, std::min(a.precision_, b.precision_));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    return PadicInt::reduced(a.residue_ - b.residue_, std::min(a.precision_, b.precision_));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    return PadicInt::reduced(a.residue_ * b.residue_, std::min(a.precision_, b.precision_));
}

PadicInt operator-(const PadicInt& a) {
    return PadicInt::reduced(-a.residue_, a.precision_);
}

bool agrees(const PadicInt& a, const PadicInt& b) {
    return agreement_depth(a, b) == std::min(a.precision(), b.precision());
}

std::uint32_t agreement_depth(const PadicInt& a, const PadicInt& b) {
    const std::uint32_t bits = std::min(a.precision(), b.precision());
    mpz_class diff = a.residue() - b.residue();
    reduce_in_place(diff, bits);
    if (diff == 0) return bits;
    return static_cast<std::uint32_t>(mpz_scan1(diff.get_mpz_t(), 0));
}

std::uint32_t v2(const PadicInt& a) {
    if (a.is_zero()) {
        throw Error(Errc::valuation_indeterminate,
                    "valuation-indeterminate: all " + std::to_string(a.precision()) +
                        " known digits are zero");
    }
    return static_cast<std::uint32_t>(mpz_scan1(a.residue().get_mpz_t(), 0));
}

PadicInt invert_unit(const PadicInt& u) {
    if (!u.is_unit()) {
        throw Error(Errc::not_a_unit, "not-a-unit: even residue has no inverse in Z_2");
    }
    // r <- r (2 - u r): if u r = 1 + 2^k e then u r' = 1 - 2^{2k} e^2.
    const std::uint32_t target = u.precision();
    mpz_class r = 1;
    mpz_class t;
    for (std::uint32_t known = 1; known < target;) {
        known = std::min(target, known * 2);
        t = u.residue() * r;
        reduce_in_place(t, known);
        t = 2 - t;
        r *= t;
        reduce_in_place(r, known);
    }
    return PadicInt::make(r, target);
}

std::vector<std::uint8_t> digits(const PadicInt& a, std::uint32_t n) {
    if (n > a.precision()) {
        throw Error(Errc::insufficient_precision,
                    "insufficient-precision: asked for " + std::to_string(n) + " digits of a " +
                        std::to_string(a.precision()) + "-bit value");
    }
    std::vector<std::uint8_t> out(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(mpz_tstbit(a.residue().get_mpz_t(), i));
    }
    return out;
}

}  // namespace ghost
