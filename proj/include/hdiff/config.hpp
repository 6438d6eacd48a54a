#pragma once

#include "hdiff/errors.hpp"
#include "hdiff/representations.hpp"

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace hdiff {

inline constexpr const char* kToolVersion = "0.1.0";

/// Moduli tried in order when looking for a residue obstruction.
inline std::vector<std::uint64_t> default_modulus_pool() {
    return {8, 3, 24, 5, 40, 16, 9, 48, 120, 240, 13, 97, 193, 577, 720, 6480};
}

struct Config {
    std::vector<std::uint64_t> modulus_pool = default_modulus_pool();
    unsigned exponent_bound = kDefaultExponentBound;
    unsigned jobs = 1;
    std::optional<std::string> cache_path;

    void validate() const {
        if (modulus_pool.empty()) throw Error("config: modulus pool is empty");
        for (auto m : modulus_pool)
            if (m < 2) throw Error("config: pool entry " + std::to_string(m) + " is below 2");
        if (exponent_bound < 1) throw Error("config: exponent bound must be positive");
        check_bound(exponent_bound);
        if (jobs < 1) throw Error("config: jobs must be positive");
    }

    /// Everything that can change a classification; jobs and cache do not.
    std::string canonical() const {
        std::string s = "pool=";
        for (std::size_t i = 0; i < modulus_pool.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(modulus_pool[i]);
        }
        s += ";bound=" + std::to_string(exponent_bound) + ";version=" + kToolVersion;
        return s;
    }

    /// FNV-1a over canonical(), as 16 hex digits.
    std::string hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : canonical()) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

} // namespace hdiff
