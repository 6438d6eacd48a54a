#pragma once

/**
 * @file classify.hpp
 * @brief Per-number classification: every (smooth divisor, form) case is
 * either closed by a certificate or searched up to the configured bound.
 *
 * Cases are tried in this order:
 *   form C                -> successor smoothness (always decides)
 *   even t                -> residues mod 2 (parity filter)
 *   t = 1                 -> consecutive-pair axiom
 *   any                   -> first closing modulus in the pool
 *   prime t               -> prime split at the first pool modulus that forces parity
 *   shipped order chains
 */

#include "hdiff/config.hpp"
#include "hdiff/order_chain.hpp"
#include "hdiff/rectangle.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hdiff {

struct CaseRecord {
    SmoothNumber divisor;
    BigInt t;
    FormTag form = FormTag::A;
    std::optional<Certificate> certificate;
    std::vector<ExpPair> solutions;
    /// Search bound used when no certificate closed the case.
    unsigned searched_bound = 0;

    bool closed() const { return certificate.has_value(); }
    friend bool operator==(const CaseRecord& a, const CaseRecord& b) {
        return a.divisor == b.divisor && a.t == b.t && a.form == b.form && a.certificate == b.certificate &&
               a.solutions == b.solutions && a.searched_bound == b.searched_bound;
    }
    std::string kind() const { return certificate ? kind_name(*certificate) : "open"; }
};

struct NdhVerdict {};
struct RepresentableVerdict {
    Completeness completeness;
};
struct UnknownVerdict {
    unsigned searched_bound = 0;
};

struct Classification {
    BigInt n;
    std::variant<NdhVerdict, RepresentableVerdict, UnknownVerdict> verdict;
    std::vector<CaseRecord> cases;
    std::vector<Representation> reps;

    bool is_ndh() const { return std::holds_alternative<NdhVerdict>(verdict); }
    bool is_representable() const { return std::holds_alternative<RepresentableVerdict>(verdict); }
    bool is_unknown() const { return std::holds_alternative<UnknownVerdict>(verdict); }
    bool is_proven() const {
        auto* r = std::get_if<RepresentableVerdict>(&verdict);
        return r && r->completeness.is_proven();
    }
    const char* status() const { return is_ndh() ? "ndh" : is_representable() ? "representable" : "unknown"; }
};

/// Smallest prime factor (>= 5) of a value coprime to 6 and > 1.
inline BigInt blocking_prime(const BigInt& cofactor) {
    if (fits_u64(cofactor)) {
        std::uint64_t v = to_u64(cofactor);
        if (is_prime(v)) return cofactor;
        return BigInt(static_cast<unsigned long>(factorize(v).front().first));
    }
    for (unsigned long p = 5; p < (1UL << 24); p += 2)
        if (mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) return BigInt(p);
    throw OutOfRange("no small blocking prime for " + cofactor.get_str());
}

inline SuccessorSmoothnessCert successor_certificate(const BigInt& t) {
    SuccessorSmoothnessCert c{t, std::nullopt, std::nullopt, {}};
    auto v = valuations(t + 1);
    if (v.cofactor == 1) {
        c.exponents = ExpPair{v.v2, v.v3};
        if (v.v2 >= 1 && v.v3 >= 1) c.solutions.push_back(*c.exponents);
    } else {
        c.blocking_prime = blocking_prime(v.cofactor);
    }
    return c;
}

/// A certificate closing form(x, y) = t for all exponents, if one is found.
inline std::optional<Certificate> close_case(FormTag f, const BigInt& t, const Config& cfg) {
    if (f == FormTag::C) return successor_certificate(t);
    if (mpz_even_p(t.get_mpz_t())) {
        auto r = rectangle_analysis(f, t, 2);
        if (r.closed()) return ResidueRectangleCert{f, t, 2, r.solutions()};
    }
    if (t == 1) return GersonidesAxiomCert{f, gersonides_solutions(f)};
    if (auto c = find_obstruction(f, t, cfg.modulus_pool)) return *c;
    if (fits_u64(t) && is_prime(t)) {
        for (auto m : cfg.modulus_pool)
            if (auto c = prime_split(f, t, m)) return *c;
    }
    if (auto c = find_order_chain(f, t)) return *c;
    return std::nullopt;
}

inline CaseCloser certifying_closer(const Config& cfg) {
    return [cfg](FormTag f, const BigInt& t) -> std::optional<std::vector<ExpPair>> {
        if (auto c = close_case(f, t, cfg)) return solutions_of(*c);
        return std::nullopt;
    };
}

/// Derives representations and the verdict from a complete list of cases.
inline Classification assemble(const BigInt& n, std::vector<CaseRecord> cases) {
    Classification out;
    out.n = n;
    bool all_closed = true;
    unsigned bound = 0;
    for (const auto& rec : cases) {
        if (!rec.closed()) {
            all_closed = false;
            bound = std::max(bound, rec.searched_bound);
        }
        for (auto e : rec.solutions) out.reps.push_back(Representation::make(n, rec.divisor, {rec.form, e}));
    }
    out.cases = std::move(cases);
    normalize(out.reps);
    if (!out.reps.empty())
        out.verdict = RepresentableVerdict{all_closed ? Completeness::proven() : Completeness::up_to(bound)};
    else if (all_closed)
        out.verdict = NdhVerdict{};
    else
        out.verdict = UnknownVerdict{bound};
    return out;
}

inline Classification classify(const BigInt& n, const Config& cfg) {
    if (n < 1) throw std::invalid_argument("classify: n must be positive");
    std::vector<CaseRecord> cases;
    for (const auto& g : smooth_divisors(n)) {
        BigInt t = n / g.value;
        for (FormTag f : kAllForms) {
            CaseRecord rec{g, t, f, close_case(f, t, cfg), {}, 0};
            if (rec.certificate) {
                rec.solutions = solutions_of(*rec.certificate);
            } else {
                rec.searched_bound = cfg.exponent_bound;
                rec.solutions = search_form(f, t, cfg.exponent_bound);
            }
            cases.push_back(std::move(rec));
        }
    }
    return assemble(n, std::move(cases));
}

} // namespace hdiff
