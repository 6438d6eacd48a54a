#pragma once

/**
 * @file modular.hpp
 * @brief 64-bit modular arithmetic: powers, deterministic primality,
 * multiplicative orders and eventually periodic power orbits.
 */

#include "hdiff/errors.hpp"
#include "hdiff/smooth.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hdiff {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t mod_ui(const BigInt& v, std::uint64_t m) {
    // mpz_fdiv_ui takes unsigned long, which is 64-bit on the supported targets
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

inline bool fits_u64(const BigInt& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw OutOfRange("value " + v.get_str() + " does not fit in 64 bits");
    return mpz_get_ui(v.get_mpz_t());
}

/// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/**
 * Deterministic Miller-Rabin; the first twelve prime bases are exact for
 * every n < 3.3e24, which covers the whole 64-bit range.
 */
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Rejects inputs of 2^64 and above instead of answering probabilistically.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (!fits_u64(n)) throw OutOfRange("is_prime: " + n.get_str() + " exceeds the 64-bit exact range");
    return is_prime(to_u64(n));
}

/// Least d >= 1 with base^d == 1 (mod modulus).
inline std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    if (std::gcd(base, modulus) != 1)
        throw NotCoprime("multiplicative_order: gcd(" + std::to_string(base) + ", " +
                         std::to_string(modulus) + ") > 1");
    std::uint64_t order = euler_phi(modulus);
    for (auto [q, e] : factorize(order)) {
        (void)e;
        while (order % q == 0 && pow_mod(base, order / q, modulus) == 1) order /= q;
    }
    return order;
}

/**
 * The eventually periodic sequence base^e mod modulus.
 *
 * residues[e] holds base^e mod modulus for e < preperiod + period; beyond
 * that the sequence repeats the cycle residues[preperiod .. preperiod+period).
 */
struct PowerOrbit {
    std::uint64_t base = 2;
    std::uint64_t modulus = 2;
    unsigned preperiod = 0;
    unsigned period = 1;
    std::vector<std::uint64_t> residues;

    std::uint64_t at(std::uint64_t e) const {
        if (e < preperiod) return residues[e];
        return residues[preperiod + (e - preperiod) % period];
    }

    /// Index into residues for exponent e (e >= preperiod folds into the cycle).
    unsigned fold(std::uint64_t e) const {
        if (e < preperiod) return static_cast<unsigned>(e);
        return preperiod + static_cast<unsigned>((e - preperiod) % period);
    }
};

inline PowerOrbit power_orbit(std::uint64_t base, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("power_orbit: modulus must be >= 2");
    PowerOrbit orbit{base, modulus, 0, 1, {}};
    std::unordered_map<std::uint64_t, unsigned> first_seen;
    std::uint64_t r = 1 % modulus;
    for (unsigned e = 0;; ++e) {
        auto [it, fresh] = first_seen.emplace(r, e);
        if (!fresh) {
            orbit.preperiod = it->second;
            orbit.period = e - it->second;
            break;
        }
        orbit.residues.push_back(r);
        r = mul_mod(r, base % modulus, modulus);
    }
    return orbit;
}

} // namespace hdiff
