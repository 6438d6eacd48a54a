#include "hdiff/classify.hpp"

#include <gtest/gtest.h>

using namespace hdiff;

namespace {

std::vector<std::string> strs(const Classification& c) {
    std::vector<std::string> out;
    for (auto& r : c.reps) out.push_back(r.str());
    return out;
}

using Strings = std::vector<std::string>;

} // namespace

TEST(Classify, FortyOneIsNdh) {
    auto c = classify(41, Config{});
    ASSERT_TRUE(c.is_ndh());
    ASSERT_EQ(c.cases.size(), 3u);
    auto a = std::get<ResidueRectangleCert>(*c.cases[0].certificate);
    EXPECT_EQ(a.modulus, 8u);
    // The default pool closes form B with a pure rectangle at 120.
    auto b = std::get<ResidueRectangleCert>(*c.cases[1].certificate);
    EXPECT_EQ(b.modulus, 120u);
    auto s = std::get<SuccessorSmoothnessCert>(*c.cases[2].certificate);
    EXPECT_EQ(s.blocking_prime, BigInt(7));
}

TEST(Classify, FortyOneWithPrimeSplitPool) {
    Config cfg;
    cfg.modulus_pool = {8, 24};
    auto c = classify(41, cfg);
    ASSERT_TRUE(c.is_ndh());
    auto b = std::get<PrimeSplitCert>(*c.cases[1].certificate);
    EXPECT_EQ(b.modulus, 24u);
}

TEST(Classify, EightyTwoIsNdh) {
    auto c = classify(82, Config{});
    EXPECT_TRUE(c.is_ndh());
    EXPECT_EQ(c.cases.size(), 6u);
}

TEST(Classify, Examples) {
    auto c17 = classify(17, Config{});
    EXPECT_TRUE(c17.is_representable());
    EXPECT_TRUE(c17.is_proven());
    EXPECT_EQ(strs(c17), (Strings{"18-1", "81-64"}));
    EXPECT_EQ(strs(classify(6, Config{})), (Strings{"8-2", "9-3", "12-6", "18-12", "24-18", "54-48"}));
    EXPECT_EQ(strs(classify(728, Config{})).back(), "729-1");
    auto c255 = strs(classify(255, Config{}));
    EXPECT_NE(std::find(c255.begin(), c255.end(), "256-1"), c255.end());
}

TEST(Classify, CrippledPoolIsUnknown) {
    Config cfg;
    cfg.modulus_pool = {7};
    auto c = classify(41, cfg);
    ASSERT_TRUE(c.is_unknown());
    EXPECT_EQ(std::get<UnknownVerdict>(c.verdict).searched_bound, cfg.exponent_bound);
}

TEST(Classify, Trichotomy) {
    Config cfg;
    for (unsigned long n = 1; n <= 1000; ++n) {
        auto c = classify(n, cfg);
        int tags = c.is_ndh() + c.is_representable() + c.is_unknown();
        ASSERT_EQ(tags, 1) << n;
        ASSERT_EQ(c.is_ndh() || c.is_unknown(), c.reps.empty()) << n;
        bool all_closed = std::all_of(c.cases.begin(), c.cases.end(), [](auto& r) { return r.closed(); });
        if (c.is_ndh()) ASSERT_TRUE(all_closed) << n;
        if (c.is_representable()) ASSERT_EQ(c.is_proven(), all_closed) << n;
        ASSERT_EQ(c.cases.size(), smooth_divisors(n).size() * 3) << n;
    }
}

TEST(Classify, AgreesWithRepresentationSearch) {
    Config cfg;
    for (unsigned long n = 1; n <= 500; ++n) {
        auto c = classify(n, cfg);
        auto r = all_representations(n, cfg.exponent_bound, certifying_closer(cfg));
        std::vector<std::string> direct;
        for (auto& x : r.reps) direct.push_back(x.str());
        ASSERT_EQ(strs(c), direct) << n;
    }
}

TEST(Classify, AssembleRebuildsTheVerdict) {
    Config cfg;
    for (unsigned long n : {1UL, 5UL, 41UL, 82UL, 728UL}) {
        auto c = classify(n, cfg);
        auto again = assemble(c.n, c.cases);
        EXPECT_EQ(again.status(), std::string(c.status()));
        EXPECT_EQ(strs(again), strs(c));
    }
}

TEST(Classify, RejectsZero) { EXPECT_THROW(classify(0, Config{}), std::invalid_argument); }
