#pragma once

/**
 * @file order_chain.hpp
 * @brief Checking order-chain certificates, plus the shipped chain closing
 * 2^x - 3^y = 5 beyond its anchor (5, 3).
 *
 * The checker tracks what is known about the unknown exponent offsets
 * a = x - x0 and b = y - y0 (both assumed >= 1):
 *   - moduli known to divide / not divide 2^a - 1 and 3^b - 1,
 *   - integers known to divide / not divide a and b.
 * Moduli coprime to 6 dividing one side divide the other, because
 * 2^x0 (2^a - 1) = 3^y0 (3^b - 1).
 */

#include "hdiff/certificate.hpp"

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <vector>

namespace hdiff {

struct ChainReport {
    bool ok = false;
    std::vector<std::string> lines;
};

namespace chain_detail {

inline BigInt big(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt power_minus_one(std::uint64_t base, std::uint64_t k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, k);
    return r - 1;
}

inline bool power_is_one(std::uint64_t base, std::uint64_t e, const BigInt& m) {
    BigInt r;
    BigInt b = big(base);
    BigInt ex = big(e);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), ex.get_mpz_t(), m.get_mpz_t());
    return r == 1 % m;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline BigInt strip_six(BigInt v) {
    while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), 2)) v /= 2;
    while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), 3)) v /= 3;
    return v;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()); }

struct Knowledge {
    BigInt power_divisor[2];              // lcm of moduli dividing 2^a - 1, 3^b - 1
    std::vector<BigInt> power_nondiv[2];  // moduli not dividing them
    BigInt exp_divisor[2] = {1, 1};       // lcm of known divisors of a, b
    std::vector<BigInt> exp_nondiv[2];    // known non-divisors of a, b
    std::vector<OrderFact> orders;

    bool known_divides(int u, const BigInt& m) const { return divides(m, power_divisor[u]); }
    bool known_not_divides(int u, const BigInt& m) const {
        for (const auto& e : power_nondiv[u])
            if (divides(e, m)) return true;
        return false;
    }
    void add_power_divisor(int u, const BigInt& m) {
        power_divisor[u] = lcm(power_divisor[u], m);
        power_divisor[1 - u] = lcm(power_divisor[1 - u], strip_six(power_divisor[u]));
        power_divisor[u] = lcm(power_divisor[u], strip_six(power_divisor[1 - u]));
    }
};

inline int unknown_base(int u) { return u == 0 ? 2 : 3; }

inline int unknown_of_base(std::uint64_t base) { return base == 2 ? 0 : base == 3 ? 1 : -1; }

inline std::string fact(const std::string& s, bool ok) { return (ok ? "ok    " : "FAIL  ") + s; }

} // namespace chain_detail

/// Re-derives every step of the chain and reports each recomputed fact.
inline ChainReport check_order_chain(const OrderChainCert& chain) {
    using namespace chain_detail;
    ChainReport rep;
    auto fail = [&](const std::string& why) {
        rep.lines.push_back(fact(why, false));
        rep.ok = false;
        return rep;
    };
    if (chain.form == FormTag::C) return fail("order chains apply to forms A and B only");
    if (!in_domain(chain.form, chain.anchor) || form_value(chain.form, chain.anchor) != chain.t)
        return fail("anchor (" + std::to_string(chain.anchor.x) + "," + std::to_string(chain.anchor.y) +
                    ") does not solve the equation");

    Knowledge k;
    const unsigned x0 = chain.anchor.x, y0 = chain.anchor.y;
    // v3(2^a - 1) = y0 and v2(3^b - 1) = x0 exactly, for a, b >= 1.
    k.power_divisor[0] = pow3(y0);
    k.power_divisor[1] = pow2(x0);
    k.power_nondiv[0].push_back(pow3(y0 + 1));
    k.power_nondiv[1].push_back(pow2(x0 + 1));
    rep.lines.push_back("      anchor 2^" + std::to_string(x0) + "(2^a-1) = 3^" + std::to_string(y0) + "(3^b-1)");

    bool concluded = false;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        if (concluded) return fail("steps after the conclusion");
        const auto& step = chain.steps[i];
        if (auto* s = std::get_if<DividesFact>(&step)) {
            BigInt value = power_minus_one(s->base, s->k);
            std::string text = std::to_string(s->p) + " | " + std::to_string(s->base) + "^" + std::to_string(s->k) +
                               "-1 = " + value.get_str();
            if (s->p < 2 || !divides(big(s->p), value)) return fail(text);
            if (s->cofactor) {
                text += " = " + std::to_string(s->p) + "*" + s->cofactor->get_str();
                if (big(s->p) * *s->cofactor != value) return fail(text);
            }
            rep.lines.push_back(fact(text, true));
            int u = unknown_of_base(s->base);
            if (u >= 0 && divides(big(s->k), k.exp_divisor[u])) k.add_power_divisor(u, big(s->p));
        } else if (auto* s = std::get_if<NotDividesFact>(&step)) {
            BigInt value = power_minus_one(s->base, s->k);
            std::string text = std::to_string(s->m) + " does not divide " + std::to_string(s->base) + "^" +
                               std::to_string(s->k) + "-1";
            if (s->m < 2 || divides(big(s->m), value)) return fail(text);
            rep.lines.push_back(fact(text, true));
        } else if (auto* s = std::get_if<OrderFact>(&step)) {
            std::string text = "ord(" + std::to_string(s->base) + ", " + std::to_string(s->m) +
                               ") = " + std::to_string(s->d);
            BigInt m = big(s->m);
            bool ok = s->m >= 2 && s->d >= 1 && std::gcd(s->base, s->m) == 1 && power_is_one(s->base, s->d, m);
            for (auto q : ok ? prime_divisors(s->d) : std::vector<std::uint64_t>{})
                ok = ok && !power_is_one(s->base, s->d / q, m);
            if (!ok) return fail(text);
            rep.lines.push_back(fact(text, true));
            k.orders.push_back(*s);
        } else if (auto* s = std::get_if<DivisorConstraint>(&step)) {
            int u = s->unknown == Unknown::A ? 0 : 1;
            BigInt d = big(s->divisor);
            std::string text = std::to_string(s->divisor) + " | " + unknown_name(s->unknown);
            bool justified = s->divisor >= 1 && divides(d, k.exp_divisor[u]);
            for (const auto& o : k.orders) {
                if (justified) break;
                if (o.base != static_cast<std::uint64_t>(unknown_base(u))) continue;
                if (!k.known_divides(u, big(o.m))) continue;
                justified = divides(d, lcm(k.exp_divisor[u], big(o.d)));
            }
            if (!justified) return fail(text + " (unjustified)");
            k.exp_divisor[u] = lcm(k.exp_divisor[u], d);
            rep.lines.push_back(fact(text + ", so " + k.exp_divisor[u].get_str() + " | " + unknown_name(s->unknown),
                                     true));
        } else if (auto* s = std::get_if<NonDivisorConstraint>(&step)) {
            int u = s->unknown == Unknown::A ? 0 : 1;
            BigInt q = big(s->modulus);
            std::string text = std::to_string(s->modulus) + " does not divide " + unknown_name(s->unknown);
            bool justified = false;
            for (const auto& e : k.exp_nondiv[u]) justified = justified || divides(e, q);
            for (const auto& o : k.orders) {
                if (justified) break;
                if (o.base != static_cast<std::uint64_t>(unknown_base(u))) continue;
                if (!k.known_not_divides(u, big(o.m))) continue;
                justified = divides(big(o.d), lcm(k.exp_divisor[u], q));
            }
            if (s->modulus < 2 || !justified) return fail(text + " (unjustified)");
            k.exp_nondiv[u].push_back(q);
            rep.lines.push_back(fact(text, true));
        } else {
            bool contradiction = false;
            for (int u = 0; u < 2 && !contradiction; ++u)
                for (const auto& e : k.exp_nondiv[u])
                    if (divides(e, k.exp_divisor[u])) {
                        rep.lines.push_back(fact("contradiction: " + e.get_str() + " | " + k.exp_divisor[u].get_str() +
                                                     " | " + unknown_name(u == 0 ? Unknown::A : Unknown::B) +
                                                     " but " + e.get_str() + " does not divide it",
                                                 true));
                        contradiction = true;
                        break;
                    }
            if (!contradiction) return fail("conclusion without contradictory constraints");
            concluded = true;
        }
    }
    if (!concluded) return fail("chain has no conclusion");
    rep.ok = true;
    return rep;
}

inline bool verify_order_chain(const OrderChainCert& chain) { return check_order_chain(chain).ok; }

/// The chain for 5 = 2^x - 3^y beyond (5, 3): contradiction via 27 | 135 | a.
inline OrderChainCert five_order_chain() {
    OrderChainCert c;
    c.form = FormTag::A;
    c.t = 5;
    c.anchor = {5, 3};
    c.steps = {
        OrderFact{2, 27, 18},
        DivisorConstraint{Unknown::A, 18},
        OrderFact{2, 81, 54},
        NonDivisorConstraint{Unknown::A, 27},
        OrderFact{3, 32, 8},
        DivisorConstraint{Unknown::B, 8},
        DividesFact{41, 3, 8, BigInt(160)},
        OrderFact{2, 41, 20},
        DivisorConstraint{Unknown::A, 20},
        DividesFact{11, 2, 20, BigInt(95325)},
        OrderFact{3, 11, 5},
        DivisorConstraint{Unknown::B, 5},
        DividesFact{7, 2, 3, BigInt(1)},
        OrderFact{3, 7, 6},
        DivisorConstraint{Unknown::B, 6},
        DivisorConstraint{Unknown::B, 30},
        DividesFact{271, 3, 30, BigInt("759745874888")},
        OrderFact{2, 271, 135},
        DivisorConstraint{Unknown::A, 135},
        Conclusion{},
    };
    c.solutions = {{3, 1}, {5, 3}};
    return c;
}

inline std::vector<OrderChainCert> shipped_order_chains() { return {five_order_chain()}; }

inline std::optional<OrderChainCert> find_order_chain(FormTag f, const BigInt& t) {
    for (auto& c : shipped_order_chains())
        if (c.form == f && c.t == t) return c;
    return std::nullopt;
}

} // namespace hdiff
