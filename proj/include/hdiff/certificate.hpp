#pragma once

/**
 * @file certificate.hpp
 * @brief Certificates stating that a case form(x, y) = t has exactly a
 * given (possibly empty) list of solutions, for all exponents.
 *
 * Each variant carries enough parameters for verify() to re-derive the
 * claim from (form, t) alone.
 */

#include "hdiff/representations.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace hdiff {

/// Periodic residues mod `modulus` exclude every class beyond the orbit
/// preperiods; the finitely many boundary exponents are solved exactly.
struct ResidueRectangleCert {
    FormTag form = FormTag::A;
    BigInt t;
    std::uint64_t modulus = 2;
    std::vector<ExpPair> solutions;
    friend bool operator==(const ResidueRectangleCert&, const ResidueRectangleCert&) = default;
};

/// Residues mod `modulus` force both exponents even on every surviving class,
/// so prime t factors as a difference times a sum; the difference must be 1
/// and the Catalan base facts pin down the only targets with solutions.
struct PrimeSplitCert {
    FormTag form = FormTag::B;
    BigInt t;
    std::uint64_t modulus = 24;
    std::vector<std::uint64_t> catalan_targets;
    std::vector<ExpPair> solutions;
    friend bool operator==(const PrimeSplitCert&, const PrimeSplitCert&) = default;
};

enum class Unknown { A, B };

inline const char* unknown_name(Unknown u) { return u == Unknown::A ? "a" : "b"; }

/// p | base^k - 1, optionally with the exact cofactor.
struct DividesFact {
    std::uint64_t p = 0;
    std::uint64_t base = 2;
    std::uint64_t k = 1;
    std::optional<BigInt> cofactor;
    friend bool operator==(const DividesFact&, const DividesFact&) = default;
};

/// m does not divide base^k - 1.
struct NotDividesFact {
    std::uint64_t m = 0;
    std::uint64_t base = 2;
    std::uint64_t k = 1;
    friend bool operator==(const NotDividesFact&, const NotDividesFact&) = default;
};

/// ord_m(base) = d.
struct OrderFact {
    std::uint64_t base = 2;
    std::uint64_t m = 3;
    std::uint64_t d = 1;
    friend bool operator==(const OrderFact&, const OrderFact&) = default;
};

struct DivisorConstraint {
    Unknown unknown = Unknown::A;
    std::uint64_t divisor = 1;
    friend bool operator==(const DivisorConstraint&, const DivisorConstraint&) = default;
};

struct NonDivisorConstraint {
    Unknown unknown = Unknown::A;
    std::uint64_t modulus = 1;
    friend bool operator==(const NonDivisorConstraint&, const NonDivisorConstraint&) = default;
};

struct Conclusion {
    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

using ChainStep =
    std::variant<DividesFact, NotDividesFact, OrderFact, DivisorConstraint, NonDivisorConstraint, Conclusion>;

/**
 * Order-chain argument for form(x, y) = t anchored at a known solution
 * (x0, y0). Writing x = x0 + a, y = y0 + b gives
 *
 *     2^x0 (2^a - 1) = 3^y0 (3^b - 1),
 *
 * and the steps derive contradictory divisibility constraints on a, b >= 1.
 */
struct OrderChainCert {
    FormTag form = FormTag::A;
    BigInt t;
    ExpPair anchor;
    std::vector<ChainStep> steps;
    std::vector<ExpPair> solutions;
    friend bool operator==(const OrderChainCert&, const OrderChainCert&) = default;
};

/// Form C decided by factoring t + 1.
struct SuccessorSmoothnessCert {
    BigInt t;
    std::optional<BigInt> blocking_prime;
    std::optional<ExpPair> exponents;
    std::vector<ExpPair> solutions;
    friend bool operator==(const SuccessorSmoothnessCert&, const SuccessorSmoothnessCert&) = default;
};

/// t = 1 for forms A and B: the consecutive smooth pairs (axiomatized).
struct GersonidesAxiomCert {
    FormTag form = FormTag::A;
    std::vector<ExpPair> solutions;
    friend bool operator==(const GersonidesAxiomCert&, const GersonidesAxiomCert&) = default;
};

using Certificate =
    std::variant<ResidueRectangleCert, PrimeSplitCert, OrderChainCert, SuccessorSmoothnessCert, GersonidesAxiomCert>;

inline const char* kind_name(const Certificate& c) {
    constexpr const char* names[] = {"residue_rectangle", "prime_split", "order_chain", "successor_smoothness",
                                     "gersonides_axiom"};
    return names[c.index()];
}

inline FormTag form_of(const Certificate& c) {
    return std::visit(
        [](const auto& v) -> FormTag {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SuccessorSmoothnessCert>) return FormTag::C;
            else return v.form;
        },
        c);
}

inline BigInt target_of(const Certificate& c) {
    return std::visit(
        [](const auto& v) -> BigInt {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GersonidesAxiomCert>) return 1;
            else return v.t;
        },
        c);
}

inline const std::vector<ExpPair>& solutions_of(const Certificate& c) {
    return std::visit([](const auto& v) -> const std::vector<ExpPair>& { return v.solutions; }, c);
}

/* Base facts taken as axioms (proofs are outside this library). The test
   suite re-checks each by exhaustive search below 2^64. */

/// Consecutive smooth pairs as (form, exponents) with form value 1.
inline std::vector<ExpPair> gersonides_solutions(FormTag f) {
    switch (f) {
    case FormTag::A: return {{1, 0}, {2, 1}}; // 2-1, 4-3
    case FormTag::B: return {{1, 1}, {3, 2}}; // 3-2, 9-8
    case FormTag::C: return {};
    }
    return {};
}

/// Solutions (s, u) of 3^s - 2^u = 1.
inline constexpr std::pair<unsigned, unsigned> kCatalanThreeOverTwo[] = {{1, 1}, {2, 3}};
/// Solutions (l, k) of 2^l - 3^k = 1.
inline constexpr std::pair<unsigned, unsigned> kCatalanTwoOverThree[] = {{1, 0}, {2, 1}};

/**
 * Even-exponent solutions of form A/B implied by the Catalan facts:
 * 3^(2s) - 2^(2u) = (3^s - 2^u)(3^s + 2^u) with 3^s - 2^u = 1, and
 * symmetrically for A. Returned as (target, exponents).
 */
inline std::vector<std::pair<std::uint64_t, ExpPair>> catalan_split_solutions(FormTag f) {
    std::vector<std::pair<std::uint64_t, ExpPair>> out;
    if (f == FormTag::B) {
        for (auto [s, u] : kCatalanThreeOverTwo)
            out.push_back({pow3(s).get_ui() + pow2(u).get_ui(), ExpPair{2 * u, 2 * s}});
    } else if (f == FormTag::A) {
        for (auto [l, k] : kCatalanTwoOverThree)
            out.push_back({pow2(l).get_ui() + pow3(k).get_ui(), ExpPair{2 * l, 2 * k}});
    }
    return out;
}

inline std::vector<std::uint64_t> catalan_targets(FormTag f) {
    std::vector<std::uint64_t> out;
    for (auto& [target, e] : catalan_split_solutions(f)) out.push_back(target);
    return out;
}

} // namespace hdiff
