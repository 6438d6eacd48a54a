#pragma once

/**
 * @file verifier.hpp
 * @brief Independent certificate checker.
 *
 * Nothing here calls the builders in rectangle.hpp or modular.hpp: orbit
 * shapes are derived analytically (preperiod = valuation of the modulus,
 * period = order on the coprime part, found by stepping), residues and
 * primality go through GMP, and exact equations are solved afresh.
 */

#include "hdiff/certificate.hpp"
#include "hdiff/order_chain.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace hdiff {

struct VerifyResult {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

namespace check {

inline VerifyResult reject(std::string why) { return {false, std::move(why)}; }

struct OrbitShape {
    unsigned preperiod = 0;
    std::uint64_t period = 1;
};

inline OrbitShape orbit_shape(std::uint64_t base, std::uint64_t m) {
    OrbitShape s;
    while (m % base == 0) {
        m /= base;
        ++s.preperiod;
    }
    if (m == 1) return s;
    std::uint64_t r = base % m;
    s.period = 1;
    while (r != 1) {
        r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % m);
        ++s.period;
    }
    return s;
}

inline std::vector<std::uint64_t> residues(std::uint64_t base, std::uint64_t m, unsigned from, std::uint64_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    BigInt r, b = static_cast<unsigned long>(base), e = from, mod = static_cast<unsigned long>(m);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(r.get_ui());
        r = (r * b) % mod;
    }
    return out;
}

inline std::optional<unsigned> log_exact(BigInt v, unsigned base) {
    if (v < 1) return std::nullopt;
    unsigned e = 0;
    while (v % base == 0) {
        v /= base;
        ++e;
    }
    if (v != 1) return std::nullopt;
    return e;
}

inline unsigned xmin(FormTag f) { return f == FormTag::B ? 0 : 1; }
inline unsigned ymin(FormTag f) { return f == FormTag::A ? 0 : 1; }

inline BigInt power(unsigned base, unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// y with form(x, y) = t, for fixed x.
inline std::optional<unsigned> y_for(FormTag f, const BigInt& t, unsigned x) {
    BigInt v;
    if (f == FormTag::A) v = power(2, x) - t;
    else if (f == FormTag::B) v = power(2, x) + t;
    else {
        BigInt s = t + 1, p = power(2, x);
        if (s % p != 0) return std::nullopt;
        v = s / p;
    }
    auto y = log_exact(v, 3);
    if (y && *y < ymin(f)) return std::nullopt;
    return y;
}

/// x with form(x, y) = t, for fixed y.
inline std::optional<unsigned> x_for(FormTag f, const BigInt& t, unsigned y) {
    BigInt v;
    if (f == FormTag::A) v = power(3, y) + t;
    else if (f == FormTag::B) v = power(3, y) - t;
    else {
        BigInt s = t + 1, p = power(3, y);
        if (s % p != 0) return std::nullopt;
        v = s / p;
    }
    auto x = log_exact(v, 2);
    if (x && *x < xmin(f)) return std::nullopt;
    return x;
}

/// Every solution with x <= x_last or y <= y_last (inclusive bounds).
inline std::vector<ExpPair> strip_solutions(FormTag f, const BigInt& t, long x_last, long y_last) {
    std::set<ExpPair> found;
    for (long x = xmin(f); x <= x_last; ++x)
        if (auto y = y_for(f, t, static_cast<unsigned>(x))) found.insert({static_cast<unsigned>(x), *y});
    for (long y = ymin(f); y <= y_last; ++y)
        if (auto x = x_for(f, t, static_cast<unsigned>(y))) found.insert({*x, static_cast<unsigned>(y)});
    return {found.begin(), found.end()};
}

inline std::vector<ExpPair> sorted(std::vector<ExpPair> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline bool prime(const BigInt& n) {
    if (n < 2) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return false;
    if (n < (1UL << 40)) {
        unsigned long v = n.get_ui();
        for (unsigned long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }
    // BPSW has no counterexample below 2^64.
    return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

struct Rectangle {
    unsigned x_start = 0, y_start = 0;
    std::uint64_t x_period = 1, y_period = 1;
    std::vector<ExpPair> hits; // actual exponents (x_start + i, y_start + j)
};

inline Rectangle periodic_hits(FormTag f, const BigInt& t, std::uint64_t m) {
    auto two = orbit_shape(2, m);
    auto three = orbit_shape(3, m);
    Rectangle r;
    r.x_start = std::max(two.preperiod, xmin(f));
    r.y_start = std::max(three.preperiod, ymin(f));
    r.x_period = two.period;
    r.y_period = three.period;
    auto r2 = residues(2, m, r.x_start, two.period);
    auto r3 = residues(3, m, r.y_start, three.period);
    BigInt tm = t % static_cast<unsigned long>(m);
    const std::uint64_t target = tm.get_ui();
    for (std::uint64_t i = 0; i < r2.size(); ++i)
        for (std::uint64_t j = 0; j < r3.size(); ++j) {
            unsigned __int128 v;
            if (f == FormTag::A) v = r2[i] + m - r3[j];
            else if (f == FormTag::B) v = r3[j] + m - r2[i];
            else v = static_cast<unsigned __int128>(r2[i]) * r3[j] + m - 1;
            if (static_cast<std::uint64_t>(v % m) == target)
                r.hits.push_back({r.x_start + static_cast<unsigned>(i), r.y_start + static_cast<unsigned>(j)});
        }
    return r;
}

/// Consecutive smooth pairs below 2^64, by exhaustive enumeration.
inline const std::vector<std::pair<BigInt, BigInt>>& consecutive_below_2_64() {
    static const std::vector<std::pair<BigInt, BigInt>> pairs = [] {
        const BigInt cap = power(2, 64);
        std::vector<BigInt> all;
        for (unsigned b = 0; power(3, b) < cap; ++b)
            for (unsigned a = 0; power(2, a) * power(3, b) < cap; ++a) all.push_back(power(2, a) * power(3, b));
        std::sort(all.begin(), all.end());
        std::vector<std::pair<BigInt, BigInt>> out;
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            if (all[i + 1] - all[i] == 1) out.emplace_back(all[i], all[i + 1]);
        return out;
    }();
    return pairs;
}

inline VerifyResult rectangle(const ResidueRectangleCert& c) {
    if (c.t < 1) return reject("target must be positive");
    if (c.modulus < 2) return reject("modulus must be >= 2");
    auto r = periodic_hits(c.form, c.t, c.modulus);
    if (!r.hits.empty())
        return reject("residue " + BigInt(c.t % static_cast<unsigned long>(c.modulus)).get_str() + " is attained mod " +
                      std::to_string(c.modulus) + " at x=" + std::to_string(r.hits.front().x) +
                      ", y=" + std::to_string(r.hits.front().y));
    auto exact = strip_solutions(c.form, c.t, long(r.x_start) - 1, long(r.y_start) - 1);
    if (exact != sorted(c.solutions)) return reject("boundary solutions differ from the claimed list");
    return {};
}

inline VerifyResult prime_split(const PrimeSplitCert& c) {
    if (c.form == FormTag::C) return reject("prime split applies to forms A and B");
    if (!prime(c.t)) return reject(c.t.get_str() + " is not prime");
    if (c.modulus < 2) return reject("modulus must be >= 2");
    std::vector<std::uint64_t> expected_targets = c.form == FormTag::B ? std::vector<std::uint64_t>{5, 17}
                                                                        : std::vector<std::uint64_t>{3, 7};
    if (c.catalan_targets != expected_targets) return reject("catalan targets do not match the base facts");
    auto r = periodic_hits(c.form, c.t, c.modulus);
    if (!r.hits.empty() && (r.x_period % 2 || r.y_period % 2))
        return reject("orbit periods are odd; parities are not determined mod " + std::to_string(c.modulus));
    for (auto h : r.hits)
        if (h.x % 2 || h.y % 2) return reject("class with an odd exponent survives mod " + std::to_string(c.modulus));
    auto exact = strip_solutions(c.form, c.t, long(r.x_start) - 1, long(r.y_start) - 1);
    std::set<ExpPair> all(exact.begin(), exact.end());
    // Even exponents 2u, 2s: t = (difference)(sum), so the difference is 1.
    if (c.form == FormTag::B) {
        if (c.t == 5) all.insert({2, 2});
        if (c.t == 17) all.insert({6, 4});
    } else {
        if (c.t == 3) all.insert({2, 0});
        if (c.t == 7) all.insert({4, 2});
    }
    if (std::vector<ExpPair>(all.begin(), all.end()) != sorted(c.solutions))
        return reject("solutions differ from boundary plus split solutions");
    return {};
}

inline VerifyResult order_chain(const OrderChainCert& c) {
    auto rep = check_order_chain(c);
    if (!rep.ok) return reject("order chain: " + (rep.lines.empty() ? std::string("invalid") : rep.lines.back()));
    // The chain excludes x > x0 and y > y0 together; the strips are finite.
    auto exact = strip_solutions(c.form, c.t, c.anchor.x, c.anchor.y);
    if (exact != sorted(c.solutions)) return reject("solutions differ from the exact strip solutions");
    return {};
}

inline VerifyResult successor(const SuccessorSmoothnessCert& c) {
    if (c.t < 1) return reject("target must be positive");
    BigInt s = c.t + 1;
    if (c.blocking_prime && c.exponents) return reject("both a blocking prime and exponents given");
    if (c.blocking_prime) {
        const BigInt& p = *c.blocking_prime;
        if (p < 5 || s % p != 0 || !prime(p))
            return reject(p.get_str() + " is not a prime factor >= 5 of " + s.get_str());
        if (!c.solutions.empty()) return reject("blocked successor cannot have solutions");
        return {};
    }
    if (!c.exponents) return reject("neither a blocking prime nor exponents given");
    auto e = *c.exponents;
    if (power(2, e.x) * power(3, e.y) != s) return reject("2^a 3^b != t + 1");
    std::vector<ExpPair> expected;
    if (e.x >= 1 && e.y >= 1) expected.push_back(e);
    if (sorted(c.solutions) != expected) return reject("solutions differ from the successor factorization");
    return {};
}

inline VerifyResult gersonides(const GersonidesAxiomCert& c) {
    if (c.form == FormTag::C) return reject("axiom applies to forms A and B");
    const auto& pairs = consecutive_below_2_64();
    if (pairs.size() != 4) return reject("bounded search does not find exactly four consecutive pairs");
    std::set<ExpPair> expected;
    for (const auto& [lo, hi] : pairs) {
        auto hx = log_exact(hi, 2), ly = log_exact(lo, 3);
        auto hy = log_exact(hi, 3), lx = log_exact(lo, 2);
        if (c.form == FormTag::A && hx && ly && *hx >= 1) expected.insert({*hx, *ly});
        if (c.form == FormTag::B && hy && lx && *hy >= 1) expected.insert({*lx, *hy});
    }
    if (std::vector<ExpPair>(expected.begin(), expected.end()) != sorted(c.solutions))
        return reject("solutions differ from the consecutive pairs");
    return {};
}

} // namespace check

inline VerifyResult explain(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> VerifyResult {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ResidueRectangleCert>) return check::rectangle(c);
            else if constexpr (std::is_same_v<T, PrimeSplitCert>) return check::prime_split(c);
            else if constexpr (std::is_same_v<T, OrderChainCert>) return check::order_chain(c);
            else if constexpr (std::is_same_v<T, SuccessorSmoothnessCert>) return check::successor(c);
            else return check::gersonides(c);
        },
        cert);
}

inline bool verify(const Certificate& cert) { return explain(cert).ok; }

} // namespace hdiff
