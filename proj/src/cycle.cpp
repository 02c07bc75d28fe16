#include "ghost/cycle.hpp"

#include <cassert>
#include <string>

#include "ghost/error.hpp"

namespace ghost {

CycleModulus::CycleModulus(mpz_class value) : value_(std::move(value)) {
    if (!mpz_odd_p(value_.get_mpz_t())) {
        throw std::logic_error("cycle modulus " + value_.get_str() + " is even");
    }
}

mpz_class cycle_constant(const ParityPattern& p) {
    // C = (((2^s0) * 3 + 2^s1) * 3 + ...) + 2^s_{y-1}
    mpz_class acc = 0;
    mpz_class term;
    for (std::uint32_t s : p.sigma()) {
        acc *= 3;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, s);
        acc += term;
    }
    assert(mpz_odd_p(acc.get_mpz_t()));
    return acc;
}

CycleModulus modulus(const ParityPattern& p) {
    mpz_class two_x;
    mpz_class three_y;
    mpz_ui_pow_ui(two_x.get_mpz_t(), 2, p.x());
    mpz_ui_pow_ui(three_y.get_mpz_t(), 3, p.y());
    return CycleModulus(two_x - three_y);
}

Verdict integrality_verdict(const mpz_class& constant, const CycleModulus& modulus) {
    if (!mpz_divisible_p(constant.get_mpz_t(), modulus.value().get_mpz_t())) return Ghost{};
    mpz_class quotient;
    mpz_divexact(quotient.get_mpz_t(), constant.get_mpz_t(), modulus.value().get_mpz_t());
    return IntegerCycle{std::move(quotient)};
}

Verdict integrality_test(const ParityPattern& p) {
    return integrality_verdict(cycle_constant(p), modulus(p));
}

PadicInt solve_cycle_equation(const mpz_class& constant, const CycleModulus& modulus,
                              std::uint32_t precision) {
    const PadicInt inverse = invert_unit(PadicInt::make(modulus.value(), precision));
    return inverse * PadicInt::make(constant, precision);
}

GhostCycle ghost_cycle(const ParityPattern& p, std::uint32_t precision) {
    mpz_class c = cycle_constant(p);
    CycleModulus m = modulus(p);
    PadicInt n0 = solve_cycle_equation(c, m, precision);
    Verdict verdict = integrality_verdict(c, m);
    const bool admissible = m.positive();
    return GhostCycle{p, std::move(c), std::move(m), std::move(n0), std::move(verdict),
                      admissible};
}

mpz_class integer_solution_bound(const ParityPattern& p) {
    const CycleModulus m = modulus(p);
    if (!m.positive()) {
        throw Error(Errc::unsupported,
                    "unsupported: prefix certificates need an admissible pattern (2^x > 3^y)");
    }
    mpz_class bound;
    mpz_cdiv_q(bound.get_mpz_t(), cycle_constant(p).get_mpz_t(), m.value().get_mpz_t());
    return bound;
}

Certificate prefix_certificate(const ParityPattern& p, std::uint32_t k) {
    if (k == 0) {
        throw Error(Errc::invalid_precision, "invalid-precision: certificate needs k >= 1");
    }
    const mpz_class bound = integer_solution_bound(p);
    const mpz_class c = cycle_constant(p);
    const CycleModulus m = modulus(p);
    const PadicInt prefix = solve_cycle_equation(c, m, k);

    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    if (two_k > bound) {
        if (prefix.residue() * m.value() == c) return CertifiedInteger{prefix.residue()};
        return CertifiedGhost{};
    }
    // Here residue < 2^k <= B, so the prefix is consistent with some integer
    // n0 <= B and nothing can be concluded.
    return Inconclusive{};
}

}  // namespace ghost
