#include "doctest.h"

#include <random>

#include "ghost/cycle.hpp"
#include "ghost/error.hpp"
#include "oracles.hpp"

using ghost::validate;

namespace {

bool is_integer_cycle(const ghost::Verdict& v, long value) {
    const auto* ic = std::get_if<ghost::IntegerCycle>(&v);
    return ic != nullptr && ic->value == value;
}

}  // namespace

TEST_CASE("cycle_constant") {
    CHECK(ghost::cycle_constant(validate(2, 1, {0})) == 1);
    CHECK(ghost::cycle_constant(validate(4, 2, {0, 1})) == 5);
    CHECK(ghost::cycle_constant(validate(6, 3, {0, 2, 4})) == 37);
}

TEST_CASE("cycle_constant agrees with the term-by-term sum") {
    for (const auto& tp : ghost::enumerate_by_length(16)) {
        CHECK(ghost::cycle_constant(tp.pattern) ==
              oracle::cycle_constant_direct(oracle::sigma_of(tp.pattern)));
    }
}

TEST_CASE("modulus") {
    CHECK(ghost::modulus(validate(2, 1, {0})).value() == 1);
    CHECK(ghost::modulus(validate(4, 2, {0, 1})).value() == 7);
    CHECK(ghost::modulus(validate(1, 1, {0})).value() == -1);
    CHECK_THROWS_AS(ghost::CycleModulus(mpz_class(4)), std::logic_error);
}

TEST_CASE("ghost_cycle examples") {
    const auto trivial = ghost::ghost_cycle(validate(2, 1, {0}), 16);
    CHECK(trivial.n0.residue() == 1);
    CHECK(is_integer_cycle(trivial.verdict, 1));

    // 7^{-1} = 23 mod 32 and 5 * 23 = 115 = 19 mod 32.
    const auto g = ghost::ghost_cycle(validate(4, 2, {0, 1}), 5);
    CHECK(oracle::egcd_inverse(7, 32) == 23);
    CHECK(g.n0.residue() == 19);
    CHECK(std::holds_alternative<ghost::Ghost>(g.verdict));
    CHECK(ghost::ghost_cycle(validate(4, 2, {0, 1}), 16).n0.residue() == 9363);

    const auto twice = ghost::ghost_cycle(validate(4, 2, {0, 2}), 16);
    CHECK(twice.constant == 7);
    CHECK(twice.n0.residue() == 1);
    CHECK(is_integer_cycle(twice.verdict, 1));
}

TEST_CASE("integrality_test") {
    CHECK(is_integer_cycle(ghost::integrality_test(validate(2, 1, {0})), 1));
    CHECK(std::holds_alternative<ghost::Ghost>(ghost::integrality_test(validate(4, 2, {0, 1}))));
    CHECK(is_integer_cycle(ghost::integrality_test(validate(1, 1, {0})), -1));
}

TEST_CASE("n0 matches the brute-force residue search") {
    for (const auto& tp : ghost::enumerate_by_length(9)) {
        const auto& p = tp.pattern;
        const auto g = ghost::ghost_cycle(p, 12);
        CHECK(g.n0.residue() == oracle::brute_force_solution(g.constant, g.modulus.value(), 12));
    }
}

TEST_CASE("cycle equation residual, oddness and uniqueness across precisions") {
    for (const auto& tp : ghost::enumerate_by_length(14)) {
        const auto& p = tp.pattern;
        const auto lo = ghost::ghost_cycle(p, 40);
        const auto hi = ghost::ghost_cycle(p, 97);
        CHECK(mpz_odd_p(lo.constant.get_mpz_t()));
        CHECK(mpz_odd_p(lo.modulus.value().get_mpz_t()));
        CHECK(lo.modulus.positive() == tp.admissible);
        const auto lhs = lo.n0 * ghost::PadicInt::make(lo.modulus.value(), 40);
        CHECK(lhs == ghost::PadicInt::make(lo.constant, 40));
        CHECK(ghost::agrees(lo.n0, hi.n0));
        if (lo.is_integer()) {
            CHECK(lo.integer_value() * lo.modulus.value() == lo.constant);
            if (lo.modulus.positive()) CHECK(lo.integer_value() >= 1);
        }
    }
}

TEST_CASE("prefix_certificate examples") {
    using ghost::CertifiedGhost;
    using ghost::CertifiedInteger;
    using ghost::Inconclusive;
    CHECK(std::holds_alternative<CertifiedGhost>(
        ghost::prefix_certificate(validate(4, 2, {0, 1}), 4)));
    CHECK(ghost::prefix_certificate(validate(2, 1, {0}), 2) ==
          ghost::Certificate{CertifiedInteger{1}});
    CHECK(ghost::prefix_certificate(validate(4, 2, {0, 2}), 1) ==
          ghost::Certificate{CertifiedInteger{1}});
    CHECK(ghost::integer_solution_bound(validate(3, 1, {0})) == 1);
    const auto p = validate(5, 2, {0, 3});
    CHECK(ghost::integer_solution_bound(p) == 1);

    CHECK_THROWS_AS(ghost::prefix_certificate(validate(1, 1, {0}), 4), ghost::Error);
}

TEST_CASE("prefix_certificate is inconclusive below the bound") {
    const auto p = validate(5, 3, {0, 1, 2});  // C = 9 + 6 + 4 = 19, modulus = 5, B = 4
    REQUIRE(ghost::integer_solution_bound(p) == 4);
    CHECK(std::holds_alternative<ghost::Inconclusive>(ghost::prefix_certificate(p, 2)));
    CHECK(std::holds_alternative<ghost::CertifiedGhost>(ghost::prefix_certificate(p, 3)));
}

TEST_CASE("prefix_certificate agrees with integrality_test once conclusive") {
    for (const auto& tp : ghost::enumerate_by_length(16)) {
        if (!tp.admissible) continue;
        const auto& p = tp.pattern;
        const mpz_class bound = ghost::integer_solution_bound(p);
        std::uint32_t k = 1;
        while (oracle::two_pow(k) <= bound) ++k;
        const auto cert = ghost::prefix_certificate(p, k);
        const auto verdict = ghost::integrality_test(p);
        if (const auto* ic = std::get_if<ghost::IntegerCycle>(&verdict)) {
            CHECK(cert == ghost::Certificate{ghost::CertifiedInteger{ic->value}});
        } else {
            CHECK(std::holds_alternative<ghost::CertifiedGhost>(cert));
        }
    }
}

TEST_CASE("r-fold trivial cycle is integral with n0 = 1") {
    for (std::uint32_t r = 1; r <= 10; ++r) {
        std::vector<std::uint32_t> sigma;
        for (std::uint32_t i = 0; i < r; ++i) sigma.push_back(2 * i);
        CHECK(is_integer_cycle(ghost::integrality_test(validate(2 * r, r, sigma)), 1));
    }
}
