#pragma once

/**
 * @file rectangle.hpp
 * @brief Residue-rectangle analysis of form(x, y) = t modulo M, and the
 * certificate builders that rest on it (obstruction and prime split).
 *
 * Exponents below an orbit's preperiod are resolved by exact integer
 * solving; everything beyond is covered by one full period of each orbit.
 */

#include "hdiff/certificate.hpp"
#include "hdiff/modular.hpp"

#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

namespace hdiff {

enum class Parity { Even, Odd };

struct ForcedParities {
    Parity x = Parity::Even;
    Parity y = Parity::Even;
    friend bool operator==(const ForcedParities&, const ForcedParities&) = default;
};

struct Obstruction {};

struct ExactComplete {
    std::vector<ExpPair> solutions;
};

struct Attainable {
    /// (x mod period of 2, y mod period of 3) classes attaining t mod M.
    std::set<ExpPair> classes;
    /// Present only when every class fixes both exponent parities.
    std::optional<ForcedParities> forced;
    /// Exact solutions in the region below the preperiods.
    std::vector<ExpPair> boundary_solutions;
};

struct RectangleOutcome {
    std::variant<Obstruction, ExactComplete, Attainable> result;
    PowerOrbit two;
    PowerOrbit three;

    bool closed() const { return !std::holds_alternative<Attainable>(result); }
    /// Complete solution list when closed.
    std::vector<ExpPair> solutions() const {
        if (auto* e = std::get_if<ExactComplete>(&result)) return e->solutions;
        return {};
    }
};

namespace detail {

inline std::uint64_t form_residue(FormTag f, std::uint64_t r2, std::uint64_t r3, std::uint64_t m) {
    switch (f) {
    case FormTag::A: return (r2 + m - r3) % m;
    case FormTag::B: return (r3 + m - r2) % m;
    case FormTag::C: return (mul_mod(r2, r3, m) + m - 1) % m;
    }
    return 0;
}

/// Solutions with x below the 2-preperiod or y below the 3-preperiod.
inline std::vector<ExpPair> boundary_solutions(FormTag f, const BigInt& t, unsigned x_pre, unsigned y_pre) {
    std::set<ExpPair> found;
    for (unsigned x = min_two_exp(f); x < x_pre; ++x)
        if (auto y = solve_three_exp(f, t, x)) found.insert({x, *y});
    for (unsigned y = min_three_exp(f); y < y_pre; ++y)
        if (auto x = solve_two_exp(f, t, y)) found.insert({*x, y});
    return {found.begin(), found.end()};
}

} // namespace detail

inline RectangleOutcome rectangle_analysis(FormTag f, const BigInt& t, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("rectangle_analysis: modulus must be >= 2");
    if (t < 1) throw std::invalid_argument("rectangle_analysis: t must be positive");
    RectangleOutcome out{Obstruction{}, power_orbit(2, modulus), power_orbit(3, modulus)};
    const auto& two = out.two;
    const auto& three = out.three;
    const std::uint64_t target = mod_ui(t, modulus);

    // Periodic region starts at the later of preperiod and domain minimum.
    const unsigned x0 = std::max(two.preperiod, min_two_exp(f));
    const unsigned y0 = std::max(three.preperiod, min_three_exp(f));

    std::set<ExpPair> classes;
    if (f == FormTag::C) {
        for (unsigned i = 0; i < two.period; ++i)
            for (unsigned j = 0; j < three.period; ++j) {
                unsigned x = x0 + i, y = y0 + j;
                if (detail::form_residue(f, two.at(x), three.at(y), modulus) == target)
                    classes.insert({x % two.period, y % three.period});
            }
    } else {
        // Index the 3-cycle by residue, then match each 2-class against it.
        std::unordered_map<std::uint64_t, std::vector<unsigned>> by_residue;
        for (unsigned j = 0; j < three.period; ++j) by_residue[three.at(y0 + j)].push_back(y0 + j);
        for (unsigned i = 0; i < two.period; ++i) {
            unsigned x = x0 + i;
            std::uint64_t r2 = two.at(x);
            std::uint64_t need = f == FormTag::A ? (r2 + modulus - target) % modulus : (r2 + target) % modulus;
            auto it = by_residue.find(need);
            if (it == by_residue.end()) continue;
            for (unsigned y : it->second) classes.insert({x % two.period, y % three.period});
        }
    }

    auto boundary = detail::boundary_solutions(f, t, x0, y0);
    if (classes.empty()) {
        if (boundary.empty()) out.result = Obstruction{};
        else out.result = ExactComplete{std::move(boundary)};
        return out;
    }

    Attainable att{std::move(classes), std::nullopt, std::move(boundary)};
    if (two.period % 2 == 0 && three.period % 2 == 0) {
        const auto& first = *att.classes.begin();
        bool same_x = true, same_y = true;
        for (const auto& c : att.classes) {
            same_x = same_x && (c.x % 2 == first.x % 2);
            same_y = same_y && (c.y % 2 == first.y % 2);
        }
        if (same_x && same_y)
            att.forced = ForcedParities{first.x % 2 ? Parity::Odd : Parity::Even,
                                        first.y % 2 ? Parity::Odd : Parity::Even};
    }
    out.result = std::move(att);
    return out;
}

/// First pool modulus whose rectangle closes the case, as a certificate.
inline std::optional<ResidueRectangleCert> find_obstruction(FormTag f, const BigInt& t,
                                                            std::span<const std::uint64_t> pool) {
    for (std::uint64_t m : pool) {
        auto r = rectangle_analysis(f, t, m);
        if (r.closed()) return ResidueRectangleCert{f, t, m, r.solutions()};
    }
    return std::nullopt;
}

/**
 * Prime-split certificate for prime t at modulus M, if the residues force
 * both exponents even. Solutions are the exact boundary solutions plus the
 * Catalan-derived even solutions whose target equals t.
 */
inline std::optional<PrimeSplitCert> prime_split(FormTag f, const BigInt& t, std::uint64_t modulus) {
    if (f == FormTag::C) throw std::invalid_argument("prime_split: form C is decided by successor smoothness");
    if (!is_prime(t)) throw NotPrime("prime_split: " + t.get_str() + " is not prime");
    auto r = rectangle_analysis(f, t, modulus);
    auto* att = std::get_if<Attainable>(&r.result);
    if (!att || !att->forced || att->forced->x != Parity::Even || att->forced->y != Parity::Even)
        return std::nullopt;
    std::set<ExpPair> sols(att->boundary_solutions.begin(), att->boundary_solutions.end());
    for (auto& [target, e] : catalan_split_solutions(f))
        if (t == target && form_value(f, e) == t) sols.insert(e);
    return PrimeSplitCert{f, t, modulus, catalan_targets(f), {sols.begin(), sols.end()}};
}

} // namespace hdiff
