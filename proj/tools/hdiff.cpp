// hdiff: command-line front end for the harmonic-difference library.
//
// Exit codes: 0 success, 1 usage or internal error, 2 some classification
// is Unknown, 3 a certificate failed verification.

#include "hdiff/hdiff.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hdiff;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUnknown = 2;
constexpr int kVerifyFailed = 3;

BigInt parse_positive(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(std::string(what) + ": expected a positive decimal integer, got \"" + s + "\"");
    BigInt v(s);
    if (v < 1) throw Error(std::string(what) + " must be positive");
    return v;
}

std::pair<BigInt, BigInt> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw Error("range must look like LO..HI, got \"" + s + "\"");
    auto lo = parse_positive(s.substr(0, dots), "range start");
    auto hi = parse_positive(s.substr(dots + 2), "range end");
    if (lo > hi) throw Error("range start exceeds range end");
    return {lo, hi};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void print_table(const Table& t, const std::string& format) {
    std::cout << (format == "json" ? to_json(t) : to_csv(t));
}

/// Flags shared by every command that classifies.
struct ClassifyOptions {
    std::string pool;
    unsigned bound = 0;
    unsigned jobs = 0;
    std::string config_file;
    std::string cache;

    void attach(CLI::App* cmd) {
        cmd->add_option("--pool", pool, "Comma-separated modulus pool, replacing the default");
        cmd->add_option("--bound", bound, "Exponent bound for open cases (powers up to 2^bound)");
        cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
        cmd->add_option("--config", config_file, "Key-value configuration file");
        cmd->add_option("--cache", cache, "Classification cache file (JSON Lines)");
    }

    Config build() const {
        Config cfg;
        if (!config_file.empty()) cfg = load_config(config_file);
        if (!pool.empty()) cfg.modulus_pool = parse_pool(pool, "--pool");
        if (bound) cfg.exponent_bound = bound;
        if (jobs) cfg.jobs = jobs;
        if (!cache.empty()) cfg.cache_path = cache;
        cfg.validate();
        return cfg;
    }
};

/// Classifies through the cache when one is configured.
std::vector<Classification> run_classifier(const std::vector<BigInt>& ns, const Config& cfg) {
    auto path = resolve_cache_path(cfg);
    if (!path) return classify_all(ns, cfg);
    ClassificationCache cache(*path, cfg);
    auto out = classify_all(ns, cfg, cache.classifier());
    cache.record(out);
    return out;
}

int status_code(const std::vector<Classification>& cls) {
    for (const auto& c : cls)
        if (c.is_unknown()) return kUnknown;
    return kOk;
}

std::string describe(const CaseRecord& rec) {
    std::string s = "divisor " + rec.divisor.value.get_str() + ", form " + form_name(rec.form) + ": " + rec.kind();
    if (!rec.certificate) return s + " (searched to 2^" + std::to_string(rec.searched_bound) + ")";
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ResidueRectangleCert> || std::is_same_v<T, PrimeSplitCert>)
                s += " (modulus " + std::to_string(c.modulus) + ")";
            else if constexpr (std::is_same_v<T, OrderChainCert>)
                s += " (" + std::to_string(c.steps.size()) + " steps)";
            else if constexpr (std::is_same_v<T, SuccessorSmoothnessCert>)
                s += c.blocking_prime ? " (blocking prime " + c.blocking_prime->get_str() + ")" : " (t + 1 smooth)";
        },
        *rec.certificate);
    return s;
}

void print_classification(const Classification& c) {
    std::cout << c.n.get_str() << ": " << c.status();
    if (auto* r = std::get_if<RepresentableVerdict>(&c.verdict))
        std::cout << (r->completeness.is_proven() ? " (proven)"
                                                  : " (complete up to 2^" + std::to_string(r->completeness.bound) + ")");
    if (auto* u = std::get_if<UnknownVerdict>(&c.verdict))
        std::cout << " (no representation up to 2^" << u->searched_bound << ")";
    std::cout << "\n";
    for (const auto& r : c.reps) std::cout << "  " << r.str() << "\n";
    for (const auto& rec : c.cases) std::cout << "  case " << describe(rec) << "\n";
}

int cmd_verify(const std::string& path) {
    auto doc = decode_text(read_file(path));
    auto result = verify_document(doc);
    if (!result.ok) {
        std::cerr << "verification failed: " << result.reason << "\n";
        return kVerifyFailed;
    }
    std::cout << "ok: " << doc.n.get_str() << " " << doc.status << " (" << doc.cases.size() << " cases verified)\n";
    return kOk;
}

int cmd_chain_verify(const std::string& path) {
    std::vector<OrderChainCert> chains;
    if (path.empty()) chains = shipped_order_chains();
    else chains.push_back(decode_chain(nlohmann::json::parse(read_file(path))));
    int code = kOk;
    for (const auto& chain : chains) {
        std::cout << "chain for form " << form_name(chain.form) << ", t = " << chain.t.get_str() << "\n";
        auto report = check_order_chain(chain);
        for (const auto& line : report.lines) std::cout << "  " << line << "\n";
        auto full = explain(Certificate{chain});
        std::cout << (full.ok ? "verified" : "rejected: " + full.reason) << "\n";
        if (!full.ok) code = kVerifyFailed;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differences of 3-smooth numbers: enumeration, classification and certificates", "hdiff"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string format = "csv";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "List 3-smooth numbers up to a limit");
    std::string limit;
    enumerate->add_option("limit", limit, "Inclusive upper limit")->required();
    add_format(enumerate);

    auto* represent = app.add_subcommand("represent", "All differences h1 - h2 equal to n");
    std::string rep_n;
    unsigned rep_bound = kDefaultExponentBound;
    bool rep_uncertified = false;
    represent->add_option("n", rep_n, "Target")->required();
    represent->add_option("--bound", rep_bound, "Search bound: minuends up to 2^bound");
    represent->add_flag("--search-only", rep_uncertified, "Skip certificates; report completeness up to the bound");
    add_format(represent);

    auto* classify_cmd = app.add_subcommand("classify", "Classify integers as ndh or representable");
    std::vector<std::string> cls_ns;
    std::string emit;
    ClassifyOptions cls_opts;
    classify_cmd->add_option("n", cls_ns, "Targets")->required();
    classify_cmd->add_option("--emit-cert", emit, "Write the certificate document (single n only)");
    cls_opts.attach(classify_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate document");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "Certificate JSON")->required();

    auto* scan = app.add_subcommand("scan", "Classify a range LO..HI");
    std::string range;
    ClassifyOptions scan_opts;
    scan->add_option("range", range, "Inclusive range, e.g. 1..100")->required();
    scan_opts.attach(scan);
    add_format(scan);

    auto* families = app.add_subcommand("families", "Censuses over structured families");
    families->require_subcommand(1);
    ClassifyOptions fam_opts;
    auto* fermat = families->add_subcommand("fermat", "Fermat primes 3, 5, 17, 257, 65537");
    auto* mersenne = families->add_subcommand("mersenne", "Mersenne primes 2^p - 1");
    std::vector<unsigned> mersenne_ps = mersenne_exponents();
    mersenne->add_option("--exponents", mersenne_ps, "Exponents p")->delimiter(',');
    auto* x41 = families->add_subcommand("x41", "2^e * 41 or 3^e * 41");
    std::string x41_kind = "pow2";
    unsigned x41_max = 10;
    x41->add_option("--kind", x41_kind, "pow2 or pow3")->check(CLI::IsMember({"pow2", "pow3"}));
    x41->add_option("--max-exp", x41_max, "Largest exponent e")->check(CLI::Range(0, 512));
    auto* p48 = families->add_subcommand("p48k41", "The first primes congruent to 41 mod 48");
    std::size_t p48_count = 10;
    p48->add_option("--count", p48_count, "How many primes")->check(CLI::Range(1, 100000));
    auto* sums = families->add_subcommand("sums", "Pairwise sums within a prime family");
    std::string sums_family = "fermat";
    sums->add_option("--family", sums_family, "fermat or mersenne")->check(CLI::IsMember({"fermat", "mersenne"}));
    for (auto* sub : {fermat, mersenne, x41, p48}) fam_opts.attach(sub);
    for (auto* sub : {fermat, mersenne, x41, p48, sums}) add_format(sub);

    auto* abc = app.add_subcommand("abc", "Coprime triples a + b = c over 3-smooth values");
    std::string abc_bound = "1000000";
    std::vector<std::string> abc_ext;
    bool abc_exceptional = false;
    abc->add_option("--bound", abc_bound, "Largest value considered");
    abc->add_option("--extend", abc_ext, "Extra member sets")
        ->delimiter(',')
        ->check(CLI::IsMember({"ndh", "p48k41", "fermat", "mersenne"}));
    abc->add_flag("--exceptional-only", abc_exceptional, "Only triples with c > rad(abc)");
    add_format(abc);

    auto* chain = app.add_subcommand("chain-verify", "Check an order chain (default: the shipped chains)");
    std::string chain_path;
    chain->add_option("file", chain_path, "Order-chain JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*enumerate) {
            print_table(smooth_table(enumerate_smooth(parse_positive(limit, "limit"))), format);
            return kOk;
        }
        if (*represent) {
            auto n = parse_positive(rep_n, "n");
            auto set = all_representations(n, rep_bound, rep_uncertified ? CaseCloser{} : certifying_closer(Config{}));
            print_table(representation_table(set.reps), format);
            std::cerr << "completeness: "
                      << (set.status.is_proven() ? std::string("proven")
                                                 : "up to 2^" + std::to_string(set.status.bound))
                      << "\n";
            return kOk;
        }
        if (*classify_cmd) {
            auto cfg = cls_opts.build();
            std::vector<BigInt> ns;
            for (const auto& s : cls_ns) ns.push_back(parse_positive(s, "n"));
            if (!emit.empty() && ns.size() != 1) throw Error("--emit-cert takes exactly one n");
            auto cls = run_classifier(ns, cfg);
            for (const auto& c : cls) print_classification(c);
            if (!emit.empty()) write_file(emit, dump(to_document(cls.front(), cfg)));
            return status_code(cls);
        }
        if (*verify_cmd) return cmd_verify(verify_path);
        if (*scan) {
            auto cfg = scan_opts.build();
            auto [lo, hi] = parse_range(range);
            if (hi - lo >= 10000000) throw Error("range too large (at most 10^7 values)");
            std::vector<BigInt> ns;
            for (BigInt n = lo; n <= hi; ++n) ns.push_back(n);
            auto cls = run_classifier(ns, cfg);
            std::vector<ScanRow> rows;
            for (const auto& c : cls) rows.push_back(summarize(c));
            print_table(scan_table(rows), format);
            return status_code(cls);
        }
        if (*families) {
            if (*sums) {
                print_table(sums_table(sum_scan(sums_family == "fermat" ? PrimeFamily::Fermat : PrimeFamily::Mersenne)),
                            format);
                return kOk;
            }
            auto cfg = fam_opts.build();
            std::vector<BigInt> ns;
            if (*fermat) ns = fermat_primes();
            if (*mersenne) {
                for (unsigned p : mersenne_ps) {
                    BigInt m = pow2(p) - 1;
                    if (!fits_u64(m) || !is_prime(m))
                        throw NotMersennePrime("2^" + std::to_string(p) + " - 1 is not a desk-scale Mersenne prime");
                    ns.push_back(m);
                }
            }
            if (*x41)
                for (unsigned e = 0; e <= x41_max; ++e) ns.push_back((x41_kind == "pow2" ? pow2(e) : pow3(e)) * 41);
            if (*p48) ns = first_primes_48k41(p48_count);
            auto cls = run_classifier(ns, cfg);
            print_table(census_table(cls), format);
            return status_code(cls);
        }
        if (*abc) {
            std::vector<Extension> exts;
            for (const auto& e : abc_ext)
                exts.push_back(e == "ndh"      ? Extension::NdhList
                               : e == "p48k41" ? Extension::Primes48k41
                               : e == "fermat" ? Extension::Fermat
                                               : Extension::Mersenne);
            auto bound = parse_positive(abc_bound, "--bound");
            if (bound > 100000000) throw Error("--bound is limited to 10^8");
            auto triples = abc_audit(std::span<const Extension>(exts), bound);
            if (abc_exceptional) std::erase_if(triples, [](const AbcTriple& t) { return !t.exceptional; });
            print_table(abc_table(triples), format);
            return kOk;
        }
        if (*chain) return cmd_chain_verify(chain_path);
    } catch (const DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
