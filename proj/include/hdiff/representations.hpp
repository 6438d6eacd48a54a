#pragma once

/**
 * @file representations.hpp
 * @brief Writing n as h1 - h2 with h1, h2 3-smooth.
 *
 * Every representation factors uniquely as n = g * (h1' - h2') where
 * g = gcd(h1, h2) is a smooth divisor of n and (h1', h2') is a coprime
 * smooth pair. Coprime pairs come in three shapes:
 *
 *   A(x, y) = 2^x - 3^y        x >= 1, y >= 0
 *   B(x, y) = 3^y - 2^x        x >= 0, y >= 1
 *   C(x, y) = 2^x * 3^y - 1    x >= 1, y >= 1
 */

#include "hdiff/errors.hpp"
#include "hdiff/smooth.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hdiff {

/// Hard ceiling on the power-value bit bound accepted by any search.
inline constexpr unsigned kExponentCeiling = 4096;
inline constexpr unsigned kDefaultExponentBound = 96;

enum class FormTag { A, B, C };

inline constexpr FormTag kAllForms[] = {FormTag::A, FormTag::B, FormTag::C};

inline const char* form_name(FormTag f) {
    switch (f) {
    case FormTag::A: return "A";
    case FormTag::B: return "B";
    case FormTag::C: return "C";
    }
    return "?";
}

inline std::optional<FormTag> parse_form(const std::string& s) {
    if (s == "A") return FormTag::A;
    if (s == "B") return FormTag::B;
    if (s == "C") return FormTag::C;
    return std::nullopt;
}

/// Exponent pair (x, y): x is the exponent of 2, y the exponent of 3.
struct ExpPair {
    unsigned x = 0;
    unsigned y = 0;
    friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

inline unsigned min_two_exp(FormTag f) { return f == FormTag::B ? 0u : 1u; }
inline unsigned min_three_exp(FormTag f) { return f == FormTag::A ? 0u : 1u; }

inline bool in_domain(FormTag f, ExpPair e) {
    return e.x >= min_two_exp(f) && e.y >= min_three_exp(f);
}

/// Signed value of the form's expression at (x, y).
inline BigInt form_value(FormTag f, ExpPair e) {
    switch (f) {
    case FormTag::A: return pow2(e.x) - pow3(e.y);
    case FormTag::B: return pow3(e.y) - pow2(e.x);
    case FormTag::C: return pow2(e.x) * pow3(e.y) - 1;
    }
    return 0;
}

/// Minuend and subtrahend of the coprime pair behind a form solution.
inline std::pair<SmoothNumber, SmoothNumber> form_terms(FormTag f, ExpPair e) {
    switch (f) {
    case FormTag::A: return {make_smooth(e.x, 0), make_smooth(0, e.y)};
    case FormTag::B: return {make_smooth(0, e.y), make_smooth(e.x, 0)};
    case FormTag::C: return {make_smooth(e.x, e.y), make_smooth(0, 0)};
    }
    return {};
}

struct PrimitiveForm {
    FormTag tag = FormTag::A;
    ExpPair exps;

    BigInt value() const { return form_value(tag, exps); }
    bool valid() const { return in_domain(tag, exps) && value() > 0; }
};

/// Solve the form equation for y with x fixed, exactly over the integers.
inline std::optional<unsigned> solve_three_exp(FormTag f, const BigInt& t, unsigned x) {
    if (x < min_two_exp(f)) return std::nullopt;
    BigInt target;
    switch (f) {
    case FormTag::A: target = pow2(x) - t; break;
    case FormTag::B: target = t + pow2(x); break;
    case FormTag::C: {
        BigInt succ = t + 1;
        if (mpz_scan1(succ.get_mpz_t(), 0) < x) return std::nullopt;
        mpz_fdiv_q_2exp(target.get_mpz_t(), succ.get_mpz_t(), x);
        break;
    }
    }
    auto y = exact_log3(target);
    if (!y || *y < min_three_exp(f)) return std::nullopt;
    return y;
}

/// Solve the form equation for x with y fixed, exactly over the integers.
inline std::optional<unsigned> solve_two_exp(FormTag f, const BigInt& t, unsigned y) {
    if (y < min_three_exp(f)) return std::nullopt;
    BigInt target;
    switch (f) {
    case FormTag::A: target = t + pow3(y); break;
    case FormTag::B: target = pow3(y) - t; break;
    case FormTag::C: {
        BigInt succ = t + 1;
        BigInt p = pow3(y);
        if (!mpz_divisible_p(succ.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
        target = succ / p;
        break;
    }
    }
    auto x = exact_log2(target);
    if (!x || *x < min_two_exp(f)) return std::nullopt;
    return x;
}

/// Decides t = 2^a 3^b - 1 completely (a, b unrestricted).
inline std::optional<ExpPair> solve_succ_smooth(const BigInt& t) {
    if (t < 1) throw std::invalid_argument("solve_succ_smooth: t must be positive");
    auto s = is_smooth(t + 1);
    if (!s) return std::nullopt;
    return ExpPair{s->two_exp, s->three_exp};
}

inline void check_bound(unsigned bound) {
    if (bound > kExponentCeiling)
        throw BoundTooLarge("exponent bound " + std::to_string(bound) + " exceeds ceiling " +
                            std::to_string(kExponentCeiling));
}

/**
 * All solutions of form(x, y) = t whose power values 2^x and 3^y are both
 * at most 2^bound, ascending by x.
 */
inline std::vector<ExpPair> search_form(FormTag f, const BigInt& t, unsigned bound) {
    check_bound(bound);
    if (t < 1) throw std::invalid_argument("search_form: t must be positive");
    const BigInt cap = pow2(bound);
    const bool even = mpz_even_p(t.get_mpz_t());
    std::vector<ExpPair> out;
    auto accept = [&](ExpPair e) {
        if (pow2(e.x) <= cap && pow3(e.y) <= cap) out.push_back(e);
    };
    switch (f) {
    case FormTag::A:
        // 2^x - 3^y is odd for x >= 1
        if (even) break;
        for (unsigned y = 0; pow3(y) <= cap; ++y)
            if (auto x = solve_two_exp(f, t, y)) accept({*x, y});
        break;
    case FormTag::B:
        // 3^y - 2^x is even only for x = 0
        for (unsigned x = 0; x <= bound && (x == 0 || !even); ++x)
            if (auto y = solve_three_exp(f, t, x)) accept({x, *y});
        break;
    case FormTag::C:
        if (even) break;
        if (auto s = solve_succ_smooth(t); s && s->x >= 1 && s->y >= 1) accept(*s);
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// n = minuend - subtrahend = scale * primitive.
struct Representation {
    SmoothNumber minuend;
    SmoothNumber subtrahend;
    BigInt n;
    SmoothNumber scale;
    PrimitiveForm primitive;

    static Representation make(const BigInt& n, const SmoothNumber& scale, PrimitiveForm primitive) {
        if (!primitive.valid()) throw std::logic_error("Representation: primitive form outside its domain");
        auto [hi, lo] = form_terms(primitive.tag, primitive.exps);
        Representation r{make_smooth(hi.two_exp + scale.two_exp, hi.three_exp + scale.three_exp),
                         make_smooth(lo.two_exp + scale.two_exp, lo.three_exp + scale.three_exp), n, scale,
                         primitive};
        if (r.minuend.value - r.subtrahend.value != n || scale.value * primitive.value() != n)
            throw std::logic_error("Representation: " + r.minuend.value.get_str() + " - " +
                                   r.subtrahend.value.get_str() + " != " + n.get_str());
        return r;
    }

    std::string str() const { return minuend.value.get_str() + "-" + subtrahend.value.get_str(); }
};

struct Completeness {
    enum class Kind { Proven, UpToBound };
    Kind kind = Kind::UpToBound;
    unsigned bound = kDefaultExponentBound;

    static Completeness proven() { return {Kind::Proven, 0}; }
    static Completeness up_to(unsigned b) { return {Kind::UpToBound, b}; }
    bool is_proven() const { return kind == Kind::Proven; }
};

/// Returns the complete solution list of form(x, y) = t when it can be certified.
using CaseCloser = std::function<std::optional<std::vector<ExpPair>>(FormTag, const BigInt& t)>;

struct RepresentationSet {
    std::vector<Representation> reps;
    Completeness status;
};

/// Sorts by minuend value and drops repeated (minuend, subtrahend) pairs.
inline void normalize(std::vector<Representation>& reps) {
    std::sort(reps.begin(), reps.end(), [](const Representation& a, const Representation& b) {
        if (a.minuend.value != b.minuend.value) return a.minuend.value < b.minuend.value;
        return a.subtrahend.value < b.subtrahend.value;
    });
    reps.erase(std::unique(reps.begin(), reps.end(),
                           [](const Representation& a, const Representation& b) {
                               return a.minuend.value == b.minuend.value &&
                                      a.subtrahend.value == b.subtrahend.value;
                           }),
               reps.end());
}

/**
 * Every representation of n, case by case over (smooth divisor, form).
 *
 * Searched cases keep only representations whose minuend is <= 2^bound.
 * Cases the closer certifies contribute their full solution list; the
 * result is Proven only when every case was certified.
 */
inline RepresentationSet all_representations(const BigInt& n, unsigned bound, const CaseCloser& closer = {}) {
    check_bound(bound);
    if (n < 1) throw std::invalid_argument("all_representations: n must be positive");
    const BigInt cap = pow2(bound);
    RepresentationSet out;
    bool all_closed = true;
    for (const auto& g : smooth_divisors(n)) {
        BigInt t = n / g.value;
        for (FormTag f : kAllForms) {
            std::optional<std::vector<ExpPair>> closed;
            if (closer) closed = closer(f, t);
            if (closed) {
                for (auto e : *closed) out.reps.push_back(Representation::make(n, g, {f, e}));
                continue;
            }
            all_closed = false;
            for (auto e : search_form(f, t, bound)) {
                auto r = Representation::make(n, g, {f, e});
                if (r.minuend.value <= cap) out.reps.push_back(std::move(r));
            }
        }
    }
    normalize(out.reps);
    out.status = all_closed ? Completeness::proven() : Completeness::up_to(bound);
    return out;
}

/// Pairs (h, h + 1) of smooth values with h + 1 <= limit.
inline std::vector<std::pair<SmoothNumber, SmoothNumber>> consecutive_pairs(const BigInt& limit) {
    std::vector<std::pair<SmoothNumber, SmoothNumber>> out;
    auto all = enumerate_smooth(limit);
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i + 1].value - all[i].value == 1) out.emplace_back(all[i], all[i + 1]);
    return out;
}

} // namespace hdiff
