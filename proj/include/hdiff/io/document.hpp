#pragma once

/**
 * @file document.hpp
 * @brief JSON certificate documents.
 *
 * Every number is a decimal string. Keys are emitted in sorted order, so
 * equal documents serialize byte-identically. Decoding is strict: unknown
 * or missing fields raise DecodeError naming the JSON path.
 *
 *   {
 *     "cases": [ { "divisor": "1", "form": "A", "kind": "residue_rectangle",
 *                  "parameters": { "modulus": "8" }, "solutions": [] }, ... ],
 *     "configHash": "…", "n": "41", "status": "ndh", "toolVersion": "0.1.0"
 *   }
 */

#include "hdiff/classify.hpp"
#include "hdiff/config.hpp"
#include "hdiff/verifier.hpp"

#include "json.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace hdiff {

using json = nlohmann::json;

struct CertificateDocument {
    BigInt n;
    std::string status;
    std::vector<CaseRecord> cases;
    std::string tool_version;
    std::string config_hash;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

inline CertificateDocument to_document(const Classification& c, const Config& cfg) {
    return {c.n, c.status(), c.cases, kToolVersion, cfg.hash()};
}

/// Rebuilds the classification (representations, verdict) from a document.
inline Classification from_document(const CertificateDocument& doc) { return assemble(doc.n, doc.cases); }

namespace codec {

inline std::string dec(const BigInt& v) { return v.get_str(); }
inline std::string dec(std::uint64_t v) { return std::to_string(v); }

inline json pair_json(ExpPair e) { return json{{"x", dec(e.x)}, {"y", dec(e.y)}}; }

inline json solutions_json(const std::vector<ExpPair>& sols) {
    json arr = json::array();
    for (auto e : sols) arr.push_back(pair_json(e));
    return arr;
}

inline json step_json(const ChainStep& step) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DividesFact>) {
                json j{{"step", "divides"}, {"prime", dec(s.p)}, {"base", dec(s.base)}, {"exponent", dec(s.k)}};
                if (s.cofactor) j["cofactor"] = dec(*s.cofactor);
                return j;
            } else if constexpr (std::is_same_v<T, NotDividesFact>) {
                return {{"step", "not_divides"}, {"modulus", dec(s.m)}, {"base", dec(s.base)}, {"exponent", dec(s.k)}};
            } else if constexpr (std::is_same_v<T, OrderFact>) {
                return {{"step", "order"}, {"base", dec(s.base)}, {"modulus", dec(s.m)}, {"order", dec(s.d)}};
            } else if constexpr (std::is_same_v<T, DivisorConstraint>) {
                return {{"step", "divisor"}, {"unknown", unknown_name(s.unknown)}, {"value", dec(s.divisor)}};
            } else if constexpr (std::is_same_v<T, NonDivisorConstraint>) {
                return {{"step", "non_divisor"}, {"unknown", unknown_name(s.unknown)}, {"value", dec(s.modulus)}};
            } else {
                return {{"step", "conclusion"}};
            }
        },
        step);
}

inline json parameters_json(const CaseRecord& rec) {
    if (!rec.certificate) return json{{"searchedBound", dec(rec.searched_bound)}};
    return std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ResidueRectangleCert>) {
                return {{"modulus", dec(c.modulus)}};
            } else if constexpr (std::is_same_v<T, PrimeSplitCert>) {
                json targets = json::array();
                for (auto t : c.catalan_targets) targets.push_back(dec(t));
                return {{"modulus", dec(c.modulus)}, {"catalanTargets", targets}};
            } else if constexpr (std::is_same_v<T, OrderChainCert>) {
                json steps = json::array();
                for (const auto& s : c.steps) steps.push_back(step_json(s));
                return {{"anchor", pair_json(c.anchor)}, {"steps", steps}};
            } else if constexpr (std::is_same_v<T, SuccessorSmoothnessCert>) {
                json j = json::object();
                if (c.blocking_prime) j["blockingPrime"] = dec(*c.blocking_prime);
                if (c.exponents) j["exponents"] = pair_json(*c.exponents);
                return j;
            } else {
                return json::object();
            }
        },
        *rec.certificate);
}

/// Strict reader that tracks its JSON path for error messages.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const json& raw() const { return j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw DecodeError(path_.empty() ? "/" : path_, what); }

    void expect_object(std::initializer_list<const char*> required,
                       std::initializer_list<const char*> optional = {}) const {
        if (!j_.is_object()) fail("expected an object");
        std::set<std::string> known;
        for (auto k : required) {
            known.insert(k);
            if (!j_.contains(k)) fail(std::string("missing field \"") + k + "\"");
        }
        for (auto k : optional) known.insert(k);
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!known.count(it.key())) fail("unknown field \"" + it.key() + "\"");
    }

    bool has(const char* key) const { return j_.contains(key); }

    Reader at(const std::string& key) const { return Reader(j_.at(key), path_ + "/" + key); }

    Reader at(std::size_t i) const { return Reader(j_.at(i), path_ + "/" + std::to_string(i)); }

    std::size_t array_size() const {
        if (!j_.is_array()) fail("expected an array");
        return j_.size();
    }

    std::string str() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    BigInt big() const {
        auto s = str();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || (s.size() > 1 && s[0] == '0'))
            fail("expected a canonical decimal string, got \"" + s + "\"");
        return BigInt(s);
    }

    std::uint64_t u64() const {
        auto v = big();
        if (!fits_u64(v)) fail("value out of 64-bit range");
        return to_u64(v);
    }

    unsigned u32() const {
        auto v = u64();
        if (v > 0xffffffffULL) fail("value out of 32-bit range");
        return static_cast<unsigned>(v);
    }

    ExpPair pair() const {
        expect_object({"x", "y"});
        return {at("x").u32(), at("y").u32()};
    }

    std::vector<ExpPair> pairs() const {
        std::vector<ExpPair> out;
        for (std::size_t i = 0, n = array_size(); i < n; ++i) out.push_back(at(i).pair());
        return out;
    }

    Unknown unknown() const {
        auto s = str();
        if (s == "a") return Unknown::A;
        if (s == "b") return Unknown::B;
        fail("unknown must be \"a\" or \"b\"");
    }

private:
    const json& j_;
    std::string path_;
};

inline ChainStep read_step(const Reader& r) {
    if (!r.raw().is_object() || !r.has("step")) r.fail("expected a chain step object");
    auto kind = r.at("step").str();
    if (kind == "divides") {
        r.expect_object({"step", "prime", "base", "exponent"}, {"cofactor"});
        DividesFact f{r.at("prime").u64(), r.at("base").u64(), r.at("exponent").u64(), std::nullopt};
        if (r.has("cofactor")) f.cofactor = r.at("cofactor").big();
        return f;
    }
    if (kind == "not_divides") {
        r.expect_object({"step", "modulus", "base", "exponent"});
        return NotDividesFact{r.at("modulus").u64(), r.at("base").u64(), r.at("exponent").u64()};
    }
    if (kind == "order") {
        r.expect_object({"step", "base", "modulus", "order"});
        return OrderFact{r.at("base").u64(), r.at("modulus").u64(), r.at("order").u64()};
    }
    if (kind == "divisor") {
        r.expect_object({"step", "unknown", "value"});
        return DivisorConstraint{r.at("unknown").unknown(), r.at("value").u64()};
    }
    if (kind == "non_divisor") {
        r.expect_object({"step", "unknown", "value"});
        return NonDivisorConstraint{r.at("unknown").unknown(), r.at("value").u64()};
    }
    if (kind == "conclusion") {
        r.expect_object({"step"});
        return Conclusion{};
    }
    r.at("step").fail("unknown chain step \"" + kind + "\"");
}

inline std::vector<ChainStep> read_steps(const Reader& r) {
    std::vector<ChainStep> out;
    for (std::size_t i = 0, n = r.array_size(); i < n; ++i) out.push_back(read_step(r.at(i)));
    return out;
}

inline CaseRecord read_case(const Reader& r, const BigInt& n) {
    r.expect_object({"divisor", "form", "kind", "parameters", "solutions"});
    CaseRecord rec;
    BigInt g = r.at("divisor").big();
    auto smooth = is_smooth(g);
    if (!smooth || !mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t()))
        r.at("divisor").fail("divisor must be a smooth divisor of n");
    rec.divisor = make_smooth(smooth->two_exp, smooth->three_exp);
    rec.t = n / g;
    auto form = parse_form(r.at("form").str());
    if (!form) r.at("form").fail("form must be A, B or C");
    rec.form = *form;
    rec.solutions = r.at("solutions").pairs();
    auto kind = r.at("kind").str();
    auto p = r.at("parameters");
    const auto& t = rec.t;
    if (kind == "open") {
        p.expect_object({"searchedBound"});
        rec.searched_bound = p.at("searchedBound").u32();
    } else if (kind == "residue_rectangle") {
        p.expect_object({"modulus"});
        rec.certificate = ResidueRectangleCert{rec.form, t, p.at("modulus").u64(), rec.solutions};
    } else if (kind == "prime_split") {
        p.expect_object({"modulus", "catalanTargets"});
        std::vector<std::uint64_t> targets;
        auto tr = p.at("catalanTargets");
        for (std::size_t i = 0, k = tr.array_size(); i < k; ++i) targets.push_back(tr.at(i).u64());
        rec.certificate = PrimeSplitCert{rec.form, t, p.at("modulus").u64(), targets, rec.solutions};
    } else if (kind == "order_chain") {
        p.expect_object({"anchor", "steps"});
        rec.certificate = OrderChainCert{rec.form, t, p.at("anchor").pair(), read_steps(p.at("steps")), rec.solutions};
    } else if (kind == "successor_smoothness") {
        if (rec.form != FormTag::C) r.at("kind").fail("successor_smoothness applies to form C");
        p.expect_object({}, {"blockingPrime", "exponents"});
        SuccessorSmoothnessCert c{t, std::nullopt, std::nullopt, rec.solutions};
        if (p.has("blockingPrime")) c.blocking_prime = p.at("blockingPrime").big();
        if (p.has("exponents")) c.exponents = p.at("exponents").pair();
        rec.certificate = c;
    } else if (kind == "gersonides_axiom") {
        p.expect_object({});
        if (t != 1) r.at("kind").fail("gersonides_axiom requires n / divisor = 1");
        rec.certificate = GersonidesAxiomCert{rec.form, rec.solutions};
    } else {
        r.at("kind").fail("unknown kind \"" + kind + "\"");
    }
    return rec;
}

} // namespace codec

inline json encode(const CertificateDocument& doc) {
    json cases = json::array();
    for (const auto& rec : doc.cases) {
        cases.push_back(json{{"divisor", codec::dec(rec.divisor.value)},
                             {"form", form_name(rec.form)},
                             {"kind", rec.kind()},
                             {"parameters", codec::parameters_json(rec)},
                             {"solutions", codec::solutions_json(rec.solutions)}});
    }
    return json{{"n", codec::dec(doc.n)},
                {"status", doc.status},
                {"cases", cases},
                {"toolVersion", doc.tool_version},
                {"configHash", doc.config_hash}};
}

inline std::string dump(const CertificateDocument& doc) { return encode(doc).dump(2) + "\n"; }

inline CertificateDocument decode(const json& j) {
    codec::Reader r(j, "");
    r.expect_object({"n", "status", "cases", "toolVersion", "configHash"});
    CertificateDocument doc;
    doc.n = r.at("n").big();
    if (doc.n < 1) r.at("n").fail("n must be positive");
    doc.status = r.at("status").str();
    if (doc.status != "ndh" && doc.status != "representable" && doc.status != "unknown")
        r.at("status").fail("status must be ndh, representable or unknown");
    doc.tool_version = r.at("toolVersion").str();
    doc.config_hash = r.at("configHash").str();
    auto cr = r.at("cases");
    for (std::size_t i = 0, k = cr.array_size(); i < k; ++i) doc.cases.push_back(codec::read_case(cr.at(i), doc.n));
    return doc;
}

/// Parses text; syntax errors report the byte offset.
inline CertificateDocument decode_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DecodeError("byte " + std::to_string(e.byte), e.what());
    }
    return decode(j);
}

/**
 * Checks a document end to end: the case list is exactly (smooth divisors
 * of n) x (A, B, C), every certificate passes the independent verifier,
 * every listed solution solves its equation, and the status matches.
 */
inline VerifyResult verify_document(const CertificateDocument& doc) {
    auto bad = [](std::string why) { return VerifyResult{false, std::move(why)}; };
    auto divisors = smooth_divisors(doc.n);
    if (doc.cases.size() != divisors.size() * 3) return bad("case list does not cover every divisor and form");
    bool all_closed = true, any_solution = false;
    for (std::size_t i = 0; i < doc.cases.size(); ++i) {
        const auto& rec = doc.cases[i];
        std::string where = "case " + std::to_string(i) + " (divisor " + rec.divisor.value.get_str() + ", form " +
                            form_name(rec.form) + "): ";
        if (!(rec.divisor == divisors[i / 3]) || rec.form != kAllForms[i % 3])
            return bad(where + "cases out of canonical order");
        if (rec.t * rec.divisor.value != doc.n) return bad(where + "target does not match n / divisor");
        for (auto e : rec.solutions)
            if (!in_domain(rec.form, e) || form_value(rec.form, e) != rec.t)
                return bad(where + "listed solution does not solve the equation");
        any_solution = any_solution || !rec.solutions.empty();
        if (!rec.certificate) {
            all_closed = false;
            continue;
        }
        if (form_of(*rec.certificate) != rec.form || target_of(*rec.certificate) != rec.t)
            return bad(where + "certificate is for a different case");
        if (solutions_of(*rec.certificate) != rec.solutions) return bad(where + "solutions differ from certificate");
        if (auto v = explain(*rec.certificate); !v.ok) return bad(where + v.reason);
    }
    std::string expected = any_solution ? "representable" : all_closed ? "ndh" : "unknown";
    if (doc.status != expected) return bad("status \"" + doc.status + "\" but cases imply \"" + expected + "\"");
    return {};
}

/// Order-chain files: {"form", "t", "anchor", "steps", "solutions"}.
inline json encode_chain(const OrderChainCert& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back(codec::step_json(s));
    return json{{"form", form_name(c.form)},
                {"t", codec::dec(c.t)},
                {"anchor", codec::pair_json(c.anchor)},
                {"steps", steps},
                {"solutions", codec::solutions_json(c.solutions)}};
}

inline OrderChainCert decode_chain(const json& j) {
    codec::Reader r(j, "");
    r.expect_object({"form", "t", "anchor", "steps", "solutions"});
    auto form = parse_form(r.at("form").str());
    if (!form || *form == FormTag::C) r.at("form").fail("form must be A or B");
    return OrderChainCert{*form, r.at("t").big(), r.at("anchor").pair(), codec::read_steps(r.at("steps")),
                          r.at("solutions").pairs()};
}

} // namespace hdiff
