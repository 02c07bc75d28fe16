#pragma once

// Test-only reference computations. Nothing here calls into the code under
// test, so agreement between the two is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ghost/patterns.hpp"

namespace oracle {

// Inverse of a modulo m by the extended Euclidean algorithm.
inline mpz_class egcd_inverse(mpz_class a, const mpz_class& m) {
    a %= m;
    if (a < 0) a += m;
    mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

inline mpz_class pow_by_multiplication(unsigned base, unsigned exp) {
    mpz_class r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline mpz_class two_pow(unsigned k) { return pow_by_multiplication(2, k); }

// sum_k q^{y-1-k} d 2^{sigma_k}, term by term.
inline mpz_class cycle_constant_direct(const std::vector<unsigned>& sigma, unsigned q = 3,
                                       long d = 1) {
    const unsigned y = static_cast<unsigned>(sigma.size());
    mpz_class sum = 0;
    for (unsigned k = 0; k < y; ++k) {
        sum += pow_by_multiplication(q, y - 1 - k) * d * pow_by_multiplication(2, sigma[k]);
    }
    return sum;
}

// The n in [0, 2^k) with n * modulus == constant (mod 2^k), by trying them all.
inline mpz_class brute_force_solution(const mpz_class& constant, const mpz_class& modulus,
                                      unsigned k) {
    const mpz_class m = two_pow(k);
    mpz_class target = constant % m;
    if (target < 0) target += m;
    for (mpz_class n = 0; n < m; ++n) {
        mpz_class lhs = (n * modulus) % m;
        if (lhs < 0) lhs += m;
        if (lhs == target) return n;
    }
    return -1;
}

inline mpz_class binomial_by_factorials(unsigned n, unsigned r) {
    if (r > n) return 0;
    mpz_class num = 1, den = 1;
    for (unsigned i = 1; i <= n; ++i) num *= i;
    for (unsigned i = 1; i <= r; ++i) den *= i;
    for (unsigned i = 1; i <= n - r; ++i) den *= i;
    return num / den;
}

// Classical trajectory for exactly `steps` steps, one halving at a time.
inline std::vector<mpz_class> classical(mpz_class n, unsigned steps, unsigned q = 3, long d = 1) {
    std::vector<mpz_class> out{n};
    for (unsigned i = 0; i < steps; ++i) {
        if (n % 2 != 0) {
            n = q * n + d;
        } else {
            n /= 2;
        }
        out.push_back(n);
    }
    return out;
}

// Random admissible pattern with ell <= ell_max (ell_max >= 3).
inline ghost::ParityPattern random_admissible(std::mt19937_64& rng, unsigned ell_max) {
    while (true) {
        const unsigned ell = std::uniform_int_distribution<unsigned>(3, ell_max)(rng);
        const unsigned y = std::uniform_int_distribution<unsigned>(1, ell - 1)(rng);
        const unsigned x = ell - y;
        if (y > x || two_pow(x) <= pow_by_multiplication(3, y)) continue;
        std::vector<unsigned> pool(x - 1);
        for (unsigned i = 0; i < x - 1; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::uint32_t> sigma{0};
        sigma.insert(sigma.end(), pool.begin(), pool.begin() + (y - 1));
        std::sort(sigma.begin(), sigma.end());
        return ghost::validate(x, y, sigma);
    }
}

inline std::vector<unsigned> sigma_of(const ghost::ParityPattern& p) {
    return {p.sigma().begin(), p.sigma().end()};
}

}  // namespace oracle
