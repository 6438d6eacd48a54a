#pragma once

// Config files are "key = value" lines; '#' starts a comment.
//
//   pool = 8, 3, 24, 5
//   exponent_bound = 96
//   jobs = 2
//   cache = /tmp/hdiff.jsonl

#include "hdiff/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace hdiff {

namespace config_detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::uint64_t parse_u64(const std::string& text, const std::string& where) {
    auto s = trim(text);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
        throw DecodeError(where, "expected a non-negative integer, got \"" + s + "\"");
    return std::stoull(s);
}

} // namespace config_detail

/// Comma-separated moduli, as used by both the config file and --pool.
inline std::vector<std::uint64_t> parse_pool(const std::string& text, const std::string& where = "pool") {
    std::vector<std::uint64_t> pool;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pool.push_back(config_detail::parse_u64(item, where));
    if (pool.empty()) throw DecodeError(where, "empty modulus pool");
    return pool;
}

/// Applies the settings in `text` on top of `base`.
inline Config parse_config(const std::string& text, Config base = {}, const std::string& name = "config") {
    std::istringstream in(text);
    std::string line;
    for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
        const std::string where = name + ":" + std::to_string(lineno);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = config_detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DecodeError(where, "expected key = value");
        auto key = config_detail::trim(line.substr(0, eq));
        auto value = config_detail::trim(line.substr(eq + 1));
        if (key == "pool") {
            base.modulus_pool = parse_pool(value, where);
        } else if (key == "exponent_bound") {
            auto b = config_detail::parse_u64(value, where);
            if (b > kExponentCeiling) throw DecodeError(where, "exponent_bound exceeds " + std::to_string(kExponentCeiling));
            base.exponent_bound = static_cast<unsigned>(b);
        } else if (key == "jobs") {
            auto j = config_detail::parse_u64(value, where);
            if (j < 1 || j > 1024) throw DecodeError(where, "jobs must be between 1 and 1024");
            base.jobs = static_cast<unsigned>(j);
        } else if (key == "cache") {
            if (value.empty()) throw DecodeError(where, "cache path is empty");
            base.cache_path = value;
        } else {
            throw DecodeError(where, "unknown key \"" + key + "\"");
        }
    }
    try {
        base.validate();
    } catch (const DecodeError&) {
        throw;
    } catch (const Error& e) {
        throw DecodeError(name, e.what());
    }
    return base;
}

inline Config load_config(const std::string& path, Config base = {}) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base), path);
}

} // namespace hdiff
