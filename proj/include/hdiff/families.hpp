#pragma once

/**
 * @file families.hpp
 * @brief Scans and censuses over structured families of integers.
 */

#include "hdiff/classify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace hdiff {

/// Runs fn(0..count-1) on up to `jobs` threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = fn(i);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        const std::size_t chunk = (count + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w * chunk; i < std::min(count, (w + 1) * chunk); ++i) slots[i] = fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : workers) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

using Classifier = std::function<Classification(const BigInt&)>;

inline Classifier plain_classifier(const Config& cfg) {
    return [cfg](const BigInt& n) { return classify(n, cfg); };
}

struct ScanRow {
    BigInt n;
    std::string status;
    std::vector<std::string> kinds;
    std::vector<std::string> reps;
    bool proven = false;

    std::size_t rep_count() const { return reps.size(); }
};

inline ScanRow summarize(const Classification& c) {
    ScanRow row{c.n, c.status(), {}, {}, c.is_proven()};
    std::set<std::string> kinds;
    for (const auto& k : c.cases) kinds.insert(k.kind());
    row.kinds.assign(kinds.begin(), kinds.end());
    for (const auto& r : c.reps) row.reps.push_back(r.str());
    return row;
}

inline std::vector<Classification> classify_all(const std::vector<BigInt>& ns, const Config& cfg,
                                                const Classifier& classifier = {}) {
    auto run = classifier ? classifier : plain_classifier(cfg);
    return parallel_map(ns.size(), cfg.jobs, [&](std::size_t i) { return run(ns[i]); });
}

inline std::vector<ScanRow> ndh_scan(const BigInt& lo, const BigInt& hi, const Config& cfg,
                                     const Classifier& classifier = {}) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("ndh_scan: need 1 <= lo <= hi");
    std::vector<BigInt> ns;
    for (BigInt n = lo; n <= hi; ++n) ns.push_back(n);
    std::vector<ScanRow> rows;
    for (const auto& c : classify_all(ns, cfg, classifier)) rows.push_back(summarize(c));
    return rows;
}

enum class PowerFamily { Pow2, Pow3 };

/// 2^e * 41 (or 3^e * 41) for e = 0..max_exp.
inline std::vector<Classification> family_x41(PowerFamily kind, unsigned max_exp, const Config& cfg,
                                              const Classifier& classifier = {}) {
    std::vector<BigInt> ns;
    for (unsigned e = 0; e <= max_exp; ++e) ns.push_back((kind == PowerFamily::Pow2 ? pow2(e) : pow3(e)) * 41);
    return classify_all(ns, cfg, classifier);
}

/// The first `count` primes congruent to 41 mod 48.
inline std::vector<BigInt> first_primes_48k41(std::size_t count) {
    std::vector<BigInt> out;
    for (std::uint64_t p = 41; out.size() < count; p += 48)
        if (is_prime(p)) out.push_back(BigInt(static_cast<unsigned long>(p)));
    return out;
}

inline std::vector<Classification> primes_48k41(std::size_t count, const Config& cfg,
                                                const Classifier& classifier = {}) {
    if (count < 1) throw std::invalid_argument("primes_48k41: count must be positive");
    return classify_all(first_primes_48k41(count), cfg, classifier);
}

inline std::vector<BigInt> fermat_primes() { return {3, 5, 17, 257, 65537}; }

inline std::vector<unsigned> mersenne_exponents() { return {2, 3, 5, 7, 13, 17, 19, 31}; }

inline std::vector<Classification> fermat_report(const Config& cfg, const Classifier& classifier = {}) {
    return classify_all(fermat_primes(), cfg, classifier);
}

inline std::vector<Classification> mersenne_report(const std::vector<unsigned>& exponents, const Config& cfg,
                                                   const Classifier& classifier = {}) {
    std::vector<BigInt> ns;
    for (unsigned p : exponents) {
        BigInt m = pow2(p) - 1;
        if (!fits_u64(m) || !is_prime(m))
            throw NotMersennePrime("2^" + std::to_string(p) + " - 1 is not a known desk-scale Mersenne prime");
        ns.push_back(m);
    }
    return classify_all(ns, cfg, classifier);
}

enum class PrimeFamily { Fermat, Mersenne };

struct SumRow {
    BigInt p;
    BigInt q;
    BigInt sum;
    std::optional<SmoothExponents> smooth;
    bool coprime = false;
};

inline std::vector<BigInt> family_members(PrimeFamily fam) {
    if (fam == PrimeFamily::Fermat) return fermat_primes();
    std::vector<BigInt> out;
    for (unsigned p : mersenne_exponents()) out.push_back(pow2(p) - 1);
    return out;
}

/// All unordered pairs (with repetition) p <= q from the family.
inline std::vector<SumRow> sum_scan(PrimeFamily fam) {
    auto members = family_members(fam);
    std::vector<SumRow> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            const auto& p = members[i];
            const auto& q = members[j];
            BigInt s = p + q, g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            out.push_back({p, q, s, is_smooth(s), g == 1});
        }
    return out;
}

/// Outcome of checking "x ndh implies 2x or 3x ndh" over a set of x.
struct MultipleCheck {
    std::vector<BigInt> violations; // 2x and 3x both decided, neither ndh
    std::vector<BigInt> undecided;  // a multiple is Unknown and the other is not ndh
};

inline MultipleCheck ndh_multiple_property(const std::vector<BigInt>& ndh_set, const Config& cfg,
                                           const Classifier& classifier = {}) {
    std::vector<BigInt> ns;
    for (const auto& x : ndh_set) {
        ns.push_back(2 * x);
        ns.push_back(3 * x);
    }
    auto cls = classify_all(ns, cfg, classifier);
    MultipleCheck out;
    for (std::size_t i = 0; i < ndh_set.size(); ++i) {
        const auto& dbl = cls[2 * i];
        const auto& tpl = cls[2 * i + 1];
        if (dbl.is_ndh() || tpl.is_ndh()) continue;
        if (dbl.is_unknown() || tpl.is_unknown()) out.undecided.push_back(ndh_set[i]);
        else out.violations.push_back(ndh_set[i]);
    }
    return out;
}

} // namespace hdiff
