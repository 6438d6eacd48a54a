#include "hdiff/modular.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace hdiff;

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(97u));
    EXPECT_FALSE(is_prime(91u));
    EXPECT_FALSE(is_prime(1u));
    EXPECT_TRUE(is_prime(BigInt(2147483647)));
    EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));
    EXPECT_THROW(is_prime(pow2(64) + 13), OutOfRange);
}

TEST(IsPrime, MatchesSieve) {
    const std::size_t n = 200000;
    std::vector<bool> composite(n + 1, false);
    composite[0] = composite[1] = true;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (!composite[p])
            for (std::size_t q = p * p; q <= n; q += p) composite[q] = true;
    for (std::uint64_t k = 0; k <= n; ++k) ASSERT_EQ(is_prime(k), !composite[k]) << k;
}

TEST(IsPrime, StrongPseudoprimesRejected) {
    for (std::uint64_t c : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL,
                            3474749660383ULL, 341550071728321ULL, 3825123056546413051ULL})
        EXPECT_FALSE(is_prime(c)) << c;
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 27), 18u);
    EXPECT_EQ(multiplicative_order(2, 41), 20u);
    EXPECT_EQ(multiplicative_order(3, 7), 6u);
    EXPECT_EQ(multiplicative_order(2, 271), 135u);
    EXPECT_THROW(multiplicative_order(2, 12), NotCoprime);
}

TEST(MultiplicativeOrder, DividesTotientAndIsLeast) {
    for (std::uint64_t m = 2; m <= 10000; ++m) {
        std::uint64_t phi = 0;
        for (std::uint64_t k = 1; k <= m; ++k) phi += std::gcd(k, m) == 1;
        ASSERT_EQ(euler_phi(m), phi);
        for (std::uint64_t b : {2ULL, 3ULL}) {
            if (std::gcd(b, m) != 1) continue;
            auto d = multiplicative_order(b, m);
            ASSERT_EQ(phi % d, 0u) << b << " mod " << m;
            // least: no smaller exponent reaches 1
            std::uint64_t r = 1;
            for (std::uint64_t e = 1; e < d; ++e) {
                r = r * b % m;
                ASSERT_NE(r, 1u) << b << " mod " << m;
            }
        }
    }
}

TEST(PowerOrbit, Examples) {
    auto o = power_orbit(2, 8);
    EXPECT_EQ(o.preperiod, 3u);
    EXPECT_EQ(o.period, 1u);
    EXPECT_EQ(o.residues, (std::vector<std::uint64_t>{1, 2, 4, 0}));
    o = power_orbit(3, 8);
    EXPECT_EQ(o.preperiod, 0u);
    EXPECT_EQ(o.period, 2u);
    EXPECT_EQ(o.residues, (std::vector<std::uint64_t>{1, 3}));
    o = power_orbit(3, 10);
    EXPECT_EQ(o.preperiod, 0u);
    EXPECT_EQ(o.period, 4u);
    EXPECT_EQ(o.residues, (std::vector<std::uint64_t>{1, 3, 9, 7}));
}

TEST(PowerOrbit, Invariants) {
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<std::uint64_t> exp_dist(0, 1000000000);
    for (std::uint64_t m = 2; m <= 3000; ++m) {
        for (std::uint64_t b : {2ULL, 3ULL}) {
            auto o = power_orbit(b, m);
            ASSERT_EQ(o.residues.size(), o.preperiod + o.period);
            ASSERT_EQ(pow_mod(b, o.preperiod + o.period, m), pow_mod(b, o.preperiod, m));
            // tail no longer than floor(log_b m) + 1
            unsigned bound = 1;
            for (std::uint64_t p = b; p <= m; p *= b) ++bound;
            ASSERT_LE(o.preperiod, bound);
            for (int i = 0; i < 3; ++i) {
                auto e = exp_dist(rng);
                ASSERT_EQ(o.at(e), pow_mod(b, e, m)) << b << "^" << e << " mod " << m;
            }
        }
    }
}

TEST(PowerOrbit, RandomExponentsAgainstGmp) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::uint64_t> exp_dist(0, 1000000000), mod_dist(2, 100000);
    for (int i = 0; i < 1000; ++i) {
        auto m = mod_dist(rng);
        auto e = exp_dist(rng);
        for (unsigned long b : {2UL, 3UL}) {
            BigInt r;
            mpz_powm_ui(r.get_mpz_t(), BigInt(b).get_mpz_t(), e, BigInt(static_cast<unsigned long>(m)).get_mpz_t());
            ASSERT_EQ(power_orbit(b, m).at(e), r.get_ui());
        }
    }
}

TEST(Factorize, RoundTrip) {
    for (std::uint64_t n = 2; n <= 20000; ++n) {
        std::uint64_t prod = 1;
        for (auto [p, e] : factorize(n)) {
            ASSERT_TRUE(is_prime(p));
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        ASSERT_EQ(prod, n);
    }
}
