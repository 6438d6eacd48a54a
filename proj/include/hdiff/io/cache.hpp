#pragma once

// Classification cache: one certificate document per line (JSON Lines).
// Entries are keyed by (n, config hash); lines written under another
// configuration, or that fail verification, are skipped on load.

#include "hdiff/families.hpp"
#include "hdiff/io/document.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>

namespace hdiff {

inline constexpr const char* kCacheEnvVar = "HDIFF_CACHE";

/// The environment variable wins over the configured path.
inline std::optional<std::string> resolve_cache_path(const Config& cfg) {
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return std::string(env);
    return cfg.cache_path;
}

class ClassificationCache {
public:
    ClassificationCache(std::string path, const Config& cfg) : path_(std::move(path)), hash_(cfg.hash()), cfg_(cfg) {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto doc = decode(nlohmann::json::parse(line));
                if (doc.config_hash != hash_ || !verify_document(doc).ok) {
                    ++skipped_;
                    continue;
                }
                entries_[doc.n] = std::move(doc);
            } catch (const std::exception&) {
                ++skipped_;
            }
        }
    }

    std::size_t size() const { return entries_.size(); }
    std::size_t skipped() const { return skipped_; }

    std::optional<Classification> lookup(const BigInt& n) const {
        auto it = entries_.find(n);
        if (it == entries_.end()) return std::nullopt;
        return from_document(it->second);
    }

    /// Reads the cache, falling back to a fresh classification. Safe to share
    /// across worker threads because it never writes.
    Classifier classifier() const {
        return [this](const BigInt& n) {
            if (auto hit = lookup(n)) return *hit;
            return classify(n, cfg_);
        };
    }

    /// Appends the classifications not yet cached. Called from one thread.
    void record(const std::vector<Classification>& cls) {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw Error("cannot write cache file " + path_);
        for (const auto& c : cls) {
            if (entries_.count(c.n)) continue;
            auto doc = to_document(c, cfg_);
            out << encode(doc).dump() << "\n";
            entries_[c.n] = std::move(doc);
        }
    }

private:
    std::string path_;
    std::string hash_;
    Config cfg_;
    std::map<BigInt, CertificateDocument> entries_;
    std::size_t skipped_ = 0;
};

} // namespace hdiff
