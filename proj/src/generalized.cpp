#include "ghost/generalized.hpp"

#include <charconv>

#include "ghost/error.hpp"

namespace ghost {

GeneralizedMap::GeneralizedMap(std::uint32_t q, std::int64_t d) : q_(q), d_(d) {
    if (q < 3 || q % 2 == 0) {
        throw Error(Errc::invalid_map, "invalid-map: q must be odd and >= 3, got " +
                                           std::to_string(q));
    }
    if (d == 0 || d % 2 == 0) {
        throw Error(Errc::invalid_map, "invalid-map: d must be odd, got " + std::to_string(d));
    }
}

GeneralizedMap GeneralizedMap::parse(const std::string& text) {
    const auto comma = text.find(',');
    auto bad = [&] { return Error(Errc::invalid_map, "invalid-map: expected q,d, got '" + text + "'"); };
    if (comma == std::string::npos) throw bad();

    std::uint32_t q = 0;
    std::int64_t d = 0;
    const char* first = text.data();
    const char* mid = first + comma;
    const char* last = first + text.size();
    auto [qp, qe] = std::from_chars(first, mid, q);
    if (qe != std::errc{} || qp != mid) throw bad();
    auto [dp, de] = std::from_chars(mid + 1, last, d);
    if (de != std::errc{} || dp != last) throw bad();
    return GeneralizedMap(q, d);
}

mpz_class general_cycle_constant(const GeneralizedMap& map, const ParityPattern& p) {
    const auto sigma = p.sigma();
    const std::uint32_t y = p.y();
    mpz_class sum = 0;
    mpz_class q_pow;
    mpz_class term;
    for (std::uint32_t k = 0; k < y; ++k) {
        mpz_ui_pow_ui(q_pow.get_mpz_t(), map.q(), y - 1 - k);
        mpz_mul_2exp(term.get_mpz_t(), q_pow.get_mpz_t(), sigma[k]);
        sum += term;
    }
    return sum * static_cast<long>(map.d());
}

CycleModulus general_modulus(const GeneralizedMap& map, const ParityPattern& p) {
    mpz_class two_x;
    mpz_class q_y;
    mpz_ui_pow_ui(two_x.get_mpz_t(), 2, p.x());
    mpz_ui_pow_ui(q_y.get_mpz_t(), map.q(), p.y());
    return CycleModulus(two_x - q_y);
}

bool general_is_admissible(const GeneralizedMap& map, const ParityPattern& p) {
    const int sign = sgn(general_modulus(map, p).value());
    return map.d() > 0 ? sign > 0 : sign < 0;
}

GhostCycle general_ghost_cycle(const GeneralizedMap& map, const ParityPattern& p,
                               std::uint32_t precision) {
    mpz_class c = general_cycle_constant(map, p);
    CycleModulus m = general_modulus(map, p);
    PadicInt n0 = solve_cycle_equation(c, m, precision);
    Verdict verdict = integrality_verdict(c, m);
    return GhostCycle{p,
                      std::move(c),
                      std::move(m),
                      std::move(n0),
                      std::move(verdict),
                      general_is_admissible(map, p),
                      map.q(),
                      map.d()};
}

CycleTrace general_iterate_cycle(const GeneralizedMap& map, const ParityPattern& p,
                                 std::uint32_t precision) {
    if (precision <= p.x() + 1) {
        throw Error(Errc::insufficient_precision,
                    "insufficient-precision: iterate_cycle needs precision > x + 1 = " +
                        std::to_string(p.x() + 1));
    }
    return trace_orbit(p, general_ghost_cycle(map, p, precision).n0, map.rule());
}

std::vector<mpz_class> general_integer_oracle(const GeneralizedMap& map, const mpz_class& n,
                                              std::size_t max_steps) {
    return iterate_integer(n, max_steps, map.rule());
}

}  // namespace ghost
