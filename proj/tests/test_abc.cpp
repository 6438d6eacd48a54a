#include "hdiff/abc.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hdiff;

namespace {

// Oracle: radicals from a smallest-prime-factor sieve.
class RadicalSieve {
public:
    explicit RadicalSieve(unsigned long limit) : spf_(limit + 1, 0) {
        for (unsigned long i = 2; i <= limit; ++i)
            if (!spf_[i])
                for (unsigned long j = i; j <= limit; j += i)
                    if (!spf_[j]) spf_[j] = i;
    }
    unsigned long radical(unsigned long n) const {
        unsigned long r = 1, last = 0;
        while (n > 1) {
            unsigned long p = spf_[n];
            if (p != last) r *= p;
            last = p;
            n /= p;
        }
        return r;
    }

private:
    std::vector<unsigned long> spf_;
};

using Triple = std::tuple<unsigned long, unsigned long, unsigned long>;

std::vector<Triple> exceptional(const std::vector<AbcTriple>& ts) {
    std::vector<Triple> out;
    for (auto& t : ts)
        if (t.exceptional) out.emplace_back(t.a.get_ui(), t.b.get_ui(), t.c.get_ui());
    return out;
}

const std::vector<BigInt> kNone;

} // namespace

TEST(Radical, MatchesSieve) {
    RadicalSieve sieve(200000);
    for (unsigned long n = 1; n <= 200000; ++n) ASSERT_EQ(radical(n), sieve.radical(n)) << n;
    EXPECT_EQ(radical(pow2(100) * pow3(50) * 1000003), 6 * 1000003);
}

TEST(AbcTriple, Examples) {
    auto t = make_triple(1, 2);
    EXPECT_EQ(t.radical, 6);
    EXPECT_FALSE(t.exceptional);
    auto e = make_triple(1, 8);
    EXPECT_EQ(e.radical, 6);
    EXPECT_TRUE(e.exceptional);
    EXPECT_EQ(e.quality(), "1.226294");
}

TEST(AbcAudit, HarmonicOnlyExceptionalSetIsOneEightNine) {
    for (unsigned long bound : {9UL, 100UL, 10000UL, 1000000UL})
        EXPECT_EQ(exceptional(abc_audit(std::span<const BigInt>(kNone), bound)), (std::vector<Triple>{{1, 8, 9}}))
            << bound;
    EXPECT_THROW(abc_audit(std::span<const BigInt>(kNone), 8), std::invalid_argument);
}

TEST(AbcAudit, TriplesAreCoprimeWithExactRadicals) {
    RadicalSieve sieve(1000000);
    std::vector<Extension> all{Extension::NdhList, Extension::Primes48k41, Extension::Fermat, Extension::Mersenne};
    auto triples = abc_audit(std::span<const Extension>(all), 1000000);
    ASSERT_FALSE(triples.empty());
    for (auto& t : triples) {
        unsigned long a = t.a.get_ui(), b = t.b.get_ui(), c = t.c.get_ui();
        ASSERT_EQ(a + b, c);
        ASSERT_LE(a, b);
        ASSERT_EQ(std::gcd(a, b), 1u);
        ASSERT_EQ(std::gcd(a, c), 1u);
        unsigned long rad = sieve.radical(a) * sieve.radical(b) * sieve.radical(c);
        ASSERT_EQ(t.radical, rad);
        ASSERT_EQ(t.exceptional, c > rad);
    }
}

TEST(AbcAudit, ExtensionsOneAtATime) {
    auto only = [](Extension e) {
        std::vector<Extension> v{e};
        return exceptional(abc_audit(std::span<const Extension>(v), 1000000));
    };
    EXPECT_EQ(only(Extension::NdhList), (std::vector<Triple>{{1, 8, 9}}));
    EXPECT_EQ(only(Extension::Primes48k41), (std::vector<Triple>{{1, 8, 9}}));
    EXPECT_EQ(only(Extension::Mersenne), (std::vector<Triple>{{1, 8, 9}}));
    // 5 + 27 = 32 with rad = 30: the Fermat prime 5 adds one exceptional triple.
    EXPECT_EQ(only(Extension::Fermat), (std::vector<Triple>{{1, 8, 9}, {5, 27, 32}}));
}

TEST(AbcAudit, FermatSurfacesThreeFiveEight) {
    std::vector<Extension> fermat{Extension::Fermat};
    auto triples = abc_audit(std::span<const Extension>(fermat), 1000000);
    auto it = std::find_if(triples.begin(), triples.end(), [](auto& t) { return t.a == 3 && t.b == 5; });
    ASSERT_NE(it, triples.end());
    EXPECT_EQ(it->c, 8);
    EXPECT_EQ(it->radical, 30);
    EXPECT_FALSE(it->exceptional);
}

TEST(AbcAudit, MersenneTriplesAreNotExceptional) {
    std::vector<Extension> mersenne{Extension::Mersenne};
    auto triples = abc_audit(std::span<const Extension>(mersenne), 1000000);
    for (unsigned p : {2u, 3u, 5u, 7u, 13u, 17u, 19u}) {
        BigInt m = pow2(p) - 1;
        auto it = std::find_if(triples.begin(), triples.end(), [&](auto& t) { return t.a == 1 && t.b == m; });
        ASSERT_NE(it, triples.end()) << p;
        EXPECT_EQ(it->radical, 2 * m);
        EXPECT_FALSE(it->exceptional);
    }
}
