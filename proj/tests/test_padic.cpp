#include "doctest.h"

#include <random>

#include "ghost/error.hpp"
#include "ghost/padic.hpp"
#include "oracles.hpp"

using ghost::Errc;
using ghost::PadicInt;

namespace {

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const ghost::Error& e) {
        return e.code();
    }
    FAIL("expected ghost::Error");
    return Errc::unsupported;
}

mpz_class random_mpz(std::mt19937_64& rng, unsigned bits) {
    mpz_class r = 0;
    for (unsigned i = 0; i < bits; i += 64) {
        r <<= 64;
        r += mpz_class(std::to_string(rng()));
    }
    return r;
}

}  // namespace

TEST_CASE("make reduces into [0, 2^k)") {
    CHECK(PadicInt::make(5L, 4).residue() == 5);
    CHECK(PadicInt::make(5L, 4).precision() == 4);
    CHECK(PadicInt::make(-1L, 4).residue() == 15);
    CHECK(PadicInt::make(19L, 3).residue() == 3);
    CHECK(code_of([] { PadicInt::make(1L, 0); }) == Errc::invalid_precision);
}

TEST_CASE("ring operations truncate to the smaller precision") {
    CHECK((PadicInt::make(3L, 4) + PadicInt::make(13L, 4)).residue() == 0);
    CHECK((PadicInt::make(3L, 8) * PadicInt::make(171L, 8)).residue() == 1);
    CHECK((-PadicInt::make(1L, 4)).residue() == 15);
    CHECK((PadicInt::make(2L, 4) - PadicInt::make(3L, 4)).residue() == 15);

    const PadicInt mixed = PadicInt::make(200L, 8) + PadicInt::make(1L, 3);
    CHECK(mixed.precision() == 3);
    CHECK(mixed.residue() == 1);
}

TEST_CASE("v2") {
    CHECK(ghost::v2(PadicInt::make(12L, 8)) == 2);
    CHECK(ghost::v2(PadicInt::make(1L, 8)) == 0);
    CHECK(ghost::v2(PadicInt::make(128L, 8)) == 7);
    CHECK(code_of([] { ghost::v2(PadicInt::make(0L, 8)); }) == Errc::valuation_indeterminate);
    // 256 vanishes at 8 bits, so its valuation is unknown there.
    CHECK(code_of([] { ghost::v2(PadicInt::make(256L, 8)); }) == Errc::valuation_indeterminate);
}

TEST_CASE("invert_unit examples match the extended-gcd oracle") {
    CHECK(ghost::invert_unit(PadicInt::make(1L, 8)).residue() == 1);
    CHECK(ghost::invert_unit(PadicInt::make(3L, 8)).residue() == 171);
    CHECK(oracle::egcd_inverse(3, 256) == 171);
    CHECK(ghost::invert_unit(PadicInt::make(7L, 4)).residue() == 7);
    CHECK(ghost::invert_unit(PadicInt::make(7L, 5)).residue() == 23);
    CHECK(code_of([] { ghost::invert_unit(PadicInt::make(6L, 8)); }) == Errc::not_a_unit);
}

TEST_CASE("invert_unit is a two-sided inverse at precisions 1..256") {
    std::mt19937_64 rng(7);
    for (std::uint32_t k = 1; k <= 256; ++k) {
        for (int trial = 0; trial < 8; ++trial) {
            mpz_class value = random_mpz(rng, k + 64) | 1;
            const PadicInt u = PadicInt::make(value, k);
            const PadicInt inv = ghost::invert_unit(u);
            REQUIRE(inv.precision() == k);
            CHECK((u * inv).residue() == 1);
            CHECK((inv * u).residue() == 1);
            CHECK(inv.residue() == oracle::egcd_inverse(u.residue(), oracle::two_pow(k)));
        }
    }
}

TEST_CASE("digits") {
    using D = std::vector<std::uint8_t>;
    CHECK(ghost::digits(PadicInt::make(5L, 4), 4) == D{1, 0, 1, 0});
    CHECK(ghost::digits(PadicInt::make(-1L, 4), 4) == D{1, 1, 1, 1});
    CHECK(ghost::digits(PadicInt::make(0L, 4), 4) == D{0, 0, 0, 0});
    CHECK(code_of([] { ghost::digits(PadicInt::make(5L, 4), 5); }) == Errc::insufficient_precision);
}

TEST_CASE("digits of make(n, k) are the two's-complement low bits of n") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::int64_t>(rng());
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 64);
        const auto d = ghost::digits(PadicInt::make(static_cast<long>(n), k), k);
        const auto bits = static_cast<std::uint64_t>(n);
        for (std::uint32_t i = 0; i < k; ++i) CHECK(d[i] == ((bits >> i) & 1));
    }
}

TEST_CASE("agreement and truncation") {
    const PadicInt a = PadicInt::make(19L, 8);
    const PadicInt b = PadicInt::make(3L, 4);
    CHECK(ghost::agrees(a, b));
    CHECK_FALSE(a == b);
    CHECK(a.truncate(4) == b);
    CHECK(ghost::agreement_depth(PadicInt::make(0b1011L, 8), PadicInt::make(0b0011L, 8)) == 3);
    CHECK(ghost::agreement_depth(a, a) == 8);

    CHECK(PadicInt::make(12L, 8).shift_down(2) == PadicInt::make(3L, 6));
    CHECK(code_of([] { PadicInt::make(1L, 8).shift_down(8); }) == Errc::insufficient_precision);
}

TEST_CASE("ring laws and valuation additivity on random operands") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 200);
        const PadicInt a = PadicInt::make(random_mpz(rng, k), k);
        const PadicInt b = PadicInt::make(random_mpz(rng, k), k);
        const PadicInt c = PadicInt::make(random_mpz(rng, k), k);
        const PadicInt one = PadicInt::make(1L, k);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * one == a);
        CHECK(a + (-a) == PadicInt::make(0L, k));
        if (!a.is_zero() && !b.is_zero() && ghost::v2(a) + ghost::v2(b) < k) {
            CHECK(ghost::v2(a * b) == ghost::v2(a) + ghost::v2(b));
        }
    }
}
