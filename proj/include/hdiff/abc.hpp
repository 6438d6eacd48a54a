#pragma once

/**
 * @file abc.hpp
 * @brief abc-triple audit over 3-smooth numbers joined with extra members.
 *
 * Exceptional means c > rad(abc), decided by exact integer comparison.
 * The quality log(c)/log(rad) is only rendered for display.
 */

#include "hdiff/families.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hdiff {

inline BigInt radical(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("radical: n must be positive");
    BigInt rad = 1;
    if (fits_u64(n)) {
        for (auto [p, e] : factorize(to_u64(n))) rad *= static_cast<unsigned long>(p);
        return rad;
    }
    BigInt rest = n;
    for (unsigned long p = 2; BigInt(p) * p <= rest; ++p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        rad *= p;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    }
    if (rest > 1) rad *= rest;
    return rad;
}

struct AbcTriple {
    BigInt a, b, c;
    BigInt radical;
    bool exceptional = false;

    /// log(c) / log(rad(abc)), six decimals.
    std::string quality() const {
        auto ln = [](const BigInt& v) {
            long e = 0;
            double d = mpz_get_d_2exp(&e, v.get_mpz_t());
            return std::log(d) + static_cast<double>(e) * std::log(2.0);
        };
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", ln(c) / ln(radical));
        return buf;
    }
};

enum class Extension { NdhList, Primes48k41, Fermat, Mersenne };

inline std::vector<BigInt> extension_members(Extension ext) {
    switch (ext) {
    case Extension::NdhList: return {41, 43, 59, 67, 82, 83, 85, 86, 89, 91, 97};
    case Extension::Primes48k41: return first_primes_48k41(10);
    case Extension::Fermat: return family_members(PrimeFamily::Fermat);
    case Extension::Mersenne: return family_members(PrimeFamily::Mersenne);
    }
    return {};
}

/// Requires gcd(a, b) = 1.
inline AbcTriple make_triple(const BigInt& a, const BigInt& b) {
    AbcTriple t{a, b, a + b, 0, false};
    // pairwise coprime, so the radical factors over a, b, c separately
    t.radical = radical(a) * radical(b) * radical(t.c);
    t.exceptional = t.c > t.radical;
    return t;
}

/**
 * Coprime a + b = c with a <= b and a, b, c all in the set of smooth values
 * joined with `extra`, every value <= bound. Ordered by c, then a.
 */
inline std::vector<AbcTriple> abc_audit(std::span<const BigInt> extra, const BigInt& bound) {
    if (bound < 9) throw std::invalid_argument("abc_audit: bound must be at least 9");
    std::set<BigInt> members;
    for (auto& s : enumerate_smooth(bound)) members.insert(s.value);
    for (auto& e : extra)
        if (e >= 1 && e <= bound) members.insert(e);
    std::vector<AbcTriple> out;
    for (const auto& c : members) {
        for (const auto& a : members) {
            BigInt b = c - a;
            if (b < a) break;
            if (!members.count(b)) continue;
            BigInt g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g == 1) out.push_back(make_triple(a, b));
        }
    }
    return out;
}

inline std::vector<AbcTriple> abc_audit(std::span<const Extension> extensions, const BigInt& bound) {
    std::vector<BigInt> extra;
    for (auto e : extensions)
        for (auto& m : extension_members(e)) extra.push_back(m);
    return abc_audit(std::span<const BigInt>(extra), bound);
}

} // namespace hdiff
