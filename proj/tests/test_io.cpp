#include "hdiff/io/cache.hpp"
#include "hdiff/io/config_file.hpp"
#include "hdiff/io/document.hpp"
#include "hdiff/io/table.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hdiff;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("hdiff_io_" + std::to_string(::getpid()) + "_" + name)).string();
}

CertificateDocument doc_for(unsigned long n, const Config& cfg = {}) { return to_document(classify(n, cfg), cfg); }

std::string decode_error(const std::string& text) {
    try {
        decode_text(text);
    } catch (const DecodeError& e) {
        return e.location;
    }
    return "<no error>";
}

} // namespace

TEST(Document, RoundTripsForEveryNumberUpTo300) {
    for (unsigned long n = 1; n <= 300; ++n) {
        auto doc = doc_for(n);
        auto text = dump(doc);
        auto back = decode_text(text);
        ASSERT_EQ(back, doc) << n;
        ASSERT_EQ(dump(back), text) << n;
        ASSERT_TRUE(verify_document(back).ok) << n << ": " << verify_document(back).reason;
        ASSERT_EQ(from_document(back).status(), std::string(classify(n, Config{}).status()));
    }
}

TEST(Document, OrderChainRoundTrips) {
    auto doc = doc_for(5);
    auto back = decode_text(dump(doc));
    EXPECT_EQ(back, doc);
    EXPECT_EQ(back.cases[0].kind(), "order_chain");
}

TEST(Document, SeventeenListsItsSolutions) {
    auto j = encode(doc_for(17));
    std::vector<std::string> reps;
    for (auto& r : from_document(decode(j)).reps) reps.push_back(r.str());
    EXPECT_EQ(reps, (std::vector<std::string>{"18-1", "81-64"}));
    EXPECT_EQ(j["status"], "representable");
    EXPECT_EQ(j["n"], "17");
}

TEST(Document, KeysAndNumbersAreStrings) {
    auto text = dump(doc_for(41));
    auto j = nlohmann::json::parse(text);
    EXPECT_TRUE(j["n"].is_string());
    EXPECT_TRUE(j["cases"][0]["parameters"]["modulus"].is_string());
    // keys come out sorted
    EXPECT_LT(text.find("\"cases\""), text.find("\"configHash\""));
    EXPECT_LT(text.find("\"configHash\""), text.find("\"n\""));
}

TEST(Document, TamperedKindIsADecodeError) {
    auto j = encode(doc_for(41));
    j["cases"][0]["kind"] = "residue_square";
    EXPECT_EQ(decode_error(j.dump()), "/cases/0/kind");
}

TEST(Document, StrictDecoding) {
    auto good = encode(doc_for(41));
    auto with = [&](auto edit) {
        auto j = good;
        edit(j);
        return decode_error(j.dump());
    };
    EXPECT_EQ(with([](auto& j) { j["extra"] = "1"; }), "/");
    EXPECT_EQ(with([](auto& j) { j.erase("status"); }), "/");
    EXPECT_EQ(with([](auto& j) { j["n"] = 41; }), "/n");
    EXPECT_EQ(with([](auto& j) { j["n"] = "041"; }), "/n");
    EXPECT_EQ(with([](auto& j) { j["cases"][1]["parameters"]["modulus"] = "-8"; }), "/cases/1/parameters/modulus");
    EXPECT_EQ(with([](auto& j) { j["cases"][2]["parameters"]["witness"] = "7"; }), "/cases/2/parameters");
    EXPECT_EQ(with([](auto& j) { j["cases"][0]["form"] = "D"; }), "/cases/0/form");
    EXPECT_EQ(with([](auto& j) { j["cases"][0]["divisor"] = "5"; }), "/cases/0/divisor");
    EXPECT_EQ(with([](auto& j) { j["status"] = "maybe"; }), "/status");
    EXPECT_EQ(decode_error("{\"n\": "), "byte 7");
}

TEST(Document, VerificationCatchesInconsistencies) {
    auto doc = doc_for(41);
    auto bad_status = doc;
    bad_status.status = "representable";
    EXPECT_FALSE(verify_document(bad_status).ok);

    auto dropped = doc;
    dropped.cases.pop_back();
    EXPECT_FALSE(verify_document(dropped).ok);

    auto swapped = doc;
    std::swap(swapped.cases[0], swapped.cases[1]);
    EXPECT_FALSE(verify_document(swapped).ok);

    auto bad_cert = doc;
    std::get<ResidueRectangleCert>(*bad_cert.cases[0].certificate).modulus = 7;
    EXPECT_FALSE(verify_document(bad_cert).ok);

    auto wrong_solution = doc_for(17);
    wrong_solution.cases[0].solutions.push_back({5, 1});
    EXPECT_FALSE(verify_document(wrong_solution).ok);
}

TEST(Document, ChainCodecRoundTrips) {
    auto chain = five_order_chain();
    auto back = decode_chain(encode_chain(chain));
    EXPECT_EQ(back, chain);
    auto j = encode_chain(chain);
    j["steps"][0]["step"] = "orbit";
    EXPECT_THROW(decode_chain(j), DecodeError);
}

TEST(ConfigFile, ParsesKeysAndComments) {
    auto cfg = parse_config("# test\npool = 8, 24\nexponent_bound=64  # smaller\njobs = 2\ncache = /tmp/x.jsonl\n");
    EXPECT_EQ(cfg.modulus_pool, (std::vector<std::uint64_t>{8, 24}));
    EXPECT_EQ(cfg.exponent_bound, 64u);
    EXPECT_EQ(cfg.jobs, 2u);
    EXPECT_EQ(cfg.cache_path, std::optional<std::string>("/tmp/x.jsonl"));
}

TEST(ConfigFile, ErrorsNameTheLine) {
    auto where = [](const std::string& text) {
        try {
            parse_config(text, {}, "cfg");
        } catch (const DecodeError& e) {
            return e.location;
        }
        return std::string("<no error>");
    };
    EXPECT_EQ(where("pool = 8\ncolour = red\n"), "cfg:2");
    EXPECT_EQ(where("\n\njobs\n"), "cfg:3");
    EXPECT_EQ(where("exponent_bound = 5000\n"), "cfg:1");
    EXPECT_EQ(where("pool = 8, x\n"), "cfg:1");
    EXPECT_EQ(where("pool = 8, 1\n"), "cfg");
}

TEST(ConfigHash, IgnoresJobsAndCache) {
    Config a, b;
    b.jobs = 8;
    b.cache_path = "/tmp/elsewhere";
    EXPECT_EQ(a.hash(), b.hash());
    b.exponent_bound = 64;
    EXPECT_NE(a.hash(), b.hash());
    Config c;
    c.modulus_pool = {8, 24};
    EXPECT_NE(a.hash(), c.hash());
    EXPECT_EQ(a.hash().size(), 16u);
}

TEST(Cache, StoresAndReloads) {
    auto path = temp_path("cache.jsonl");
    std::filesystem::remove(path);
    Config cfg;
    {
        ClassificationCache cache(path, cfg);
        EXPECT_EQ(cache.size(), 0u);
        cache.record(classify_all({41, 17, 5}, cfg));
    }
    ClassificationCache again(path, cfg);
    EXPECT_EQ(again.size(), 3u);
    auto hit = again.lookup(17);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->status(), std::string("representable"));
    EXPECT_FALSE(again.lookup(18));
    std::filesystem::remove(path);
}

TEST(Cache, StaleAndCorruptEntriesIgnored) {
    auto path = temp_path("stale.jsonl");
    std::filesystem::remove(path);
    Config old_cfg;
    old_cfg.exponent_bound = 64;
    ClassificationCache(path, old_cfg).record(classify_all({41}, old_cfg));
    {
        std::ofstream out(path, std::ios::app);
        out << "{not json\n";
        auto forged = encode(to_document(classify(43, Config{}), Config{}));
        forged["status"] = "representable";
        out << forged.dump() << "\n";
    }
    ClassificationCache fresh(path, Config{});
    EXPECT_EQ(fresh.size(), 0u);
    EXPECT_EQ(fresh.skipped(), 3u);
    std::filesystem::remove(path);
}

TEST(Cache, EnvironmentOverridesPath) {
    Config cfg;
    cfg.cache_path = "/tmp/from-config.jsonl";
    ::unsetenv(kCacheEnvVar);
    EXPECT_EQ(resolve_cache_path(cfg), cfg.cache_path);
    ::setenv(kCacheEnvVar, "/tmp/from-env.jsonl", 1);
    EXPECT_EQ(resolve_cache_path(cfg), std::optional<std::string>("/tmp/from-env.jsonl"));
    ::unsetenv(kCacheEnvVar);
}

TEST(Tables, ScanCsv) {
    auto rows = ndh_scan(40, 42, Config{});
    auto csv = to_csv(scan_table(rows));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,status,kinds,repCount,reps");
    EXPECT_NE(csv.find("\n41,ndh,residue_rectangle;successor_smoothness,0,\n"), std::string::npos);
    auto json = nlohmann::json::parse(to_json(scan_table(rows)));
    EXPECT_EQ(json.size(), 3u);
    EXPECT_EQ(json[1]["status"], "ndh");
    EXPECT_EQ(json[1]["repCount"], "0");
}

TEST(Tables, CsvQuoting) {
    Table t{{"a", "b"}, {{"x,y", "say \"hi\""}}};
    EXPECT_EQ(to_csv(t), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}
