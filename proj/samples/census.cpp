// Classifies a few numbers with the library directly and checks each
// emitted certificate document with the independent verifier.
//
//   ./census 41 5 17 728

#include "hdiff/hdiff.hpp"

#include <iostream>

int main(int argc, char** argv) {
    hdiff::Config cfg;
    std::vector<hdiff::BigInt> ns;
    for (int i = 1; i < argc; ++i) ns.emplace_back(argv[i]);
    if (ns.empty()) ns = {41, 5, 17, 728};

    for (const auto& c : hdiff::classify_all(ns, cfg)) {
        std::cout << c.n << ": " << c.status();
        for (const auto& r : c.reps) std::cout << ' ' << r.str();
        auto doc = hdiff::to_document(c, cfg);
        auto check = hdiff::verify_document(doc);
        std::cout << (check.ok ? "  [verified]" : "  [rejected: " + check.reason + "]") << '\n';
        for (const auto& rec : c.cases)
            std::cout << "    g=" << rec.divisor.value << " form " << hdiff::form_name(rec.form) << ": " << rec.kind()
                      << '\n';
    }
}
