#pragma once

/**
 * @file smooth.hpp
 * @brief 3-smooth ("harmonic") numbers 2^a * 3^b: construction, ordered
 * enumeration, valuations and smooth divisors. All arithmetic is exact.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdiff {

using BigInt = mpz_class;

inline BigInt pow_ui(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt pow2(unsigned exp) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp);
    return r;
}

inline BigInt pow3(unsigned exp) { return pow_ui(3, exp); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

struct SmoothNumber {
    unsigned two_exp = 0;
    unsigned three_exp = 0;
    BigInt value = 1;

    friend bool operator==(const SmoothNumber& a, const SmoothNumber& b) {
        return a.two_exp == b.two_exp && a.three_exp == b.three_exp;
    }
    friend bool operator<(const SmoothNumber& a, const SmoothNumber& b) { return a.value < b.value; }
};

inline SmoothNumber make_smooth(unsigned a, unsigned b) {
    BigInt v = pow3(b);
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), a);
    return SmoothNumber{a, b, std::move(v)};
}

/// n = 2^v2 * 3^v3 * cofactor with gcd(cofactor, 6) = 1.
struct Valuations {
    unsigned v2 = 0;
    unsigned v3 = 0;
    BigInt cofactor = 1;
};

inline Valuations valuations(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("valuations: n must be positive");
    Valuations out;
    out.v2 = static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
    BigInt rest;
    mpz_fdiv_q_2exp(rest.get_mpz_t(), n.get_mpz_t(), out.v2);
    BigInt three = 3;
    out.v3 = static_cast<unsigned>(mpz_remove(out.cofactor.get_mpz_t(), rest.get_mpz_t(), three.get_mpz_t()));
    return out;
}

struct SmoothExponents {
    unsigned two_exp = 0;
    unsigned three_exp = 0;
    friend bool operator==(const SmoothExponents&, const SmoothExponents&) = default;
};

inline std::optional<SmoothExponents> is_smooth(const BigInt& n) {
    if (n <= 0) return std::nullopt;
    auto v = valuations(n);
    if (v.cofactor != 1) return std::nullopt;
    return SmoothExponents{v.v2, v.v3};
}

/// Exponent e with n = 2^e, if any.
inline std::optional<unsigned> exact_log2(const BigInt& n) {
    if (n <= 0) return std::nullopt;
    if (mpz_popcount(n.get_mpz_t()) != 1) return std::nullopt;
    return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

/// Exponent e with n = 3^e, if any.
inline std::optional<unsigned> exact_log3(const BigInt& n) {
    auto s = is_smooth(n);
    if (!s || s->two_exp != 0) return std::nullopt;
    return s->three_exp;
}

/**
 * All 3-smooth values <= limit in strictly ascending order.
 *
 * Merges the ladder {2h} with the ladder {3h} over the already-produced
 * prefix, so every value is emitted once and comparisons stay exact.
 */
inline std::vector<SmoothNumber> enumerate_smooth(const BigInt& limit) {
    std::vector<SmoothNumber> out;
    if (limit < 1) return out;
    out.push_back(make_smooth(0, 0));
    std::size_t i2 = 0, i3 = 0;
    for (;;) {
        BigInt by2 = out[i2].value * 2;
        BigInt by3 = out[i3].value * 3;
        const BigInt& next = by2 < by3 ? by2 : by3;
        if (next > limit) break;
        SmoothNumber s;
        if (by2 <= by3) {
            s = SmoothNumber{out[i2].two_exp + 1, out[i2].three_exp, by2};
        } else {
            s = SmoothNumber{out[i3].two_exp, out[i3].three_exp + 1, by3};
        }
        if (by2 == s.value) ++i2;
        if (by3 == s.value) ++i3;
        out.push_back(std::move(s));
    }
    return out;
}

/// Divisors of n of the form 2^i 3^j, ascending.
inline std::vector<SmoothNumber> smooth_divisors(const BigInt& n) {
    auto v = valuations(n);
    std::vector<SmoothNumber> out;
    out.reserve(static_cast<std::size_t>(v.v2 + 1) * (v.v3 + 1));
    for (unsigned i = 0; i <= v.v2; ++i)
        for (unsigned j = 0; j <= v.v3; ++j) out.push_back(make_smooth(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hdiff
