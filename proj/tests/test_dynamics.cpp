#include "doctest.h"

#include <random>

#include "ghost/cycle.hpp"
#include "ghost/dynamics.hpp"
#include "ghost/error.hpp"
#include "oracles.hpp"

using ghost::Branch;
using ghost::PadicInt;
using ghost::validate;

TEST_CASE("t2_step") {
    const auto a = ghost::t2_step(PadicInt::make(1L, 8));
    CHECK(a.result == PadicInt::make(1L, 6));
    CHECK(a.branch == Branch::Odd);
    CHECK(a.halvings == 2);

    const auto b = ghost::t2_step(PadicInt::make(19L, 5));
    CHECK(b.result == PadicInt::make(13L, 4));
    CHECK(b.branch == Branch::Odd);
    CHECK(b.halvings == 1);

    const auto c = ghost::t2_step(PadicInt::make(6L, 4));
    CHECK(c.result == PadicInt::make(3L, 3));
    CHECK(c.branch == Branch::Even);
    CHECK(c.halvings == 1);

    CHECK_THROWS_AS(ghost::t2_step(PadicInt::make(0L, 8)), ghost::Error);
    // 3*5 + 1 = 16: four halvings leave too little of a 5-bit value.
    try {
        ghost::t2_step(PadicInt::make(5L, 5));
        FAIL("expected insufficient precision");
    } catch (const ghost::Error& e) {
        CHECK(e.code() == ghost::Errc::insufficient_precision);
    }
}

TEST_CASE("iterate_cycle examples") {
    const auto trivial = ghost::iterate_cycle(validate(2, 1, {0}), 16);
    REQUIRE(trivial.m.size() == 2);
    CHECK(trivial.m[0].residue() == 1);
    CHECK(trivial.m[1].residue() == 1);
    CHECK(trivial.step_valuations == std::vector<std::uint32_t>{2});
    CHECK(trivial.final_precision == 14);
    CHECK(trivial.closed);

    const auto g = ghost::iterate_cycle(validate(4, 2, {0, 1}), 16);
    CHECK(g.step_valuations == std::vector<std::uint32_t>{1, 3});
    CHECK(g.final_precision == 12);
    CHECK(ghost::agrees(g.m[2], g.m[0]));

    const auto triple = ghost::iterate_cycle(validate(6, 3, {0, 2, 4}), 32);
    for (const auto& m : triple.m) CHECK(m.residue() == 1);
    CHECK(triple.step_valuations == std::vector<std::uint32_t>{2, 2, 2});

    CHECK_THROWS_AS(ghost::iterate_cycle(validate(4, 2, {0, 1}), 5), ghost::Error);
}

TEST_CASE("verify_periodicity") {
    CHECK(ghost::verify_periodicity(validate(2, 1, {0}), 16));
    CHECK(ghost::verify_periodicity(validate(4, 2, {0, 1}), 64));
    CHECK(ghost::verify_periodicity(validate(5, 2, {0, 3}), 64));
}

TEST_CASE("a wrong starting point is reported as a dynamics violation") {
    const auto p = validate(4, 2, {0, 1});
    try {
        ghost::trace_orbit(p, PadicInt::make(1L, 32));
        FAIL("expected DynamicsViolation");
    } catch (const ghost::DynamicsViolation& e) {
        CHECK(e.kind() == ghost::DynamicsViolation::Kind::valuation_mismatch);
        CHECK(e.step() == 0);
        CHECK(e.expected() == 1);
        CHECK(e.observed() == 2);
    }
    // n0 + 2^20 follows the same valuations but cannot close at 28 bits.
    const auto n0 = ghost::ghost_cycle(p, 32).n0;
    const auto nudged = n0 + PadicInt::make(mpz_class(1) << 20, 32);
    try {
        ghost::trace_orbit(p, nudged);
        FAIL("expected DynamicsViolation");
    } catch (const ghost::DynamicsViolation& e) {
        CHECK(e.kind() == ghost::DynamicsViolation::Kind::not_closed);
    }
}

TEST_CASE("forced valuations hold on every pattern up to ell 16") {
    for (const auto& tp : ghost::enumerate_by_length(16)) {
        const auto& p = tp.pattern;
        const auto trace = ghost::iterate_cycle(p, p.x() + 24);
        CHECK(trace.step_valuations == p.gaps());
        CHECK(trace.total_halvings() == p.x());
        CHECK(trace.total_steps() == p.ell());
        CHECK(trace.final_precision == 24);
        for (const auto& m : trace.m) CHECK(m.is_unit());
        // A_k = m_k 2^{sigma_k} satisfies A_{k+1} = 3 A_k + 2^{sigma_k}.
        for (std::uint32_t k = 0; k + 1 < p.y(); ++k) {
            const std::uint32_t bits = trace.m[k + 1].precision();
            const auto a_k = trace.m[k].truncate(bits) * PadicInt::make(oracle::two_pow(p.sigma()[k]), bits);
            const auto a_next = trace.m[k + 1] * PadicInt::make(oracle::two_pow(p.sigma()[k + 1]), bits);
            CHECK(a_next == PadicInt::make(3L, bits) * a_k +
                                PadicInt::make(oracle::two_pow(p.sigma()[k]), bits));
        }
    }
}

TEST_CASE("iterate_integer") {
    CHECK(ghost::iterate_integer(1, 100) == std::vector<mpz_class>{1, 4, 2, 1});

    const auto three = ghost::iterate_integer(3, 8);
    const auto at = std::find(three.begin(), three.end(), mpz_class(1));
    REQUIRE(at != three.end());
    CHECK(at - three.begin() <= 8);

    const auto seven = ghost::iterate_integer(7, 17);
    CHECK(std::find(seven.begin(), seven.end(), mpz_class(1)) - seven.begin() == 16);
}

TEST_CASE("integer verdicts reproduce under classical iteration") {
    for (const auto& tp : ghost::enumerate_by_length(18)) {
        const auto& p = tp.pattern;
        const auto verdict = ghost::integrality_test(p);
        const auto* ic = std::get_if<ghost::IntegerCycle>(&verdict);
        if (ic == nullptr || ic->value < 1) continue;
        const auto orbit = oracle::classical(ic->value, p.ell());
        CHECK(ghost::realizes_pattern(orbit, p));
        CHECK(ghost::classical_orbit(ic->value, p.ell()) == orbit);
    }
}

TEST_CASE("step_parities") {
    CHECK(ghost::step_parities(validate(4, 2, {0, 1})) ==
          std::vector<bool>{true, false, true, false, false, false});
}
