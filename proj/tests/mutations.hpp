#pragma once

// Twenty corrupted certificates shared by the verifier tests and the
// acceptance run. Each starts from a valid certificate and changes one thing.

#include "hdiff/order_chain.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hdiff::fixtures {

struct Mutation {
    std::string name;
    Certificate cert;
};

inline OrderChainCert chain_with(std::function<void(OrderChainCert&)> edit) {
    auto c = five_order_chain();
    edit(c);
    return c;
}

// Twenty certificates, each a small corruption of a valid one.
inline std::vector<Mutation> mutation_corpus() {
    return {
        {"rectangle: modulus 8 -> 7", ResidueRectangleCert{FormTag::A, 41, 7, {}}},
        {"rectangle: target 41 -> 47 (2^7 - 3^4)", ResidueRectangleCert{FormTag::A, 47, 8, {}}},
        {"rectangle: invented solution", ResidueRectangleCert{FormTag::A, 41, 8, {{6, 3}}}},
        {"rectangle: dropped boundary solution", ResidueRectangleCert{FormTag::B, 5, 8, {}}},
        {"rectangle: modulus 1", ResidueRectangleCert{FormTag::A, 41, 1, {}}},
        {"rectangle: form A -> B at modulus 8", ResidueRectangleCert{FormTag::B, 41, 8, {}}},
        {"prime split: modulus 24 -> 8", PrimeSplitCert{FormTag::B, 41, 8, {5, 17}, {}}},
        {"prime split: composite target", PrimeSplitCert{FormTag::B, 91, 24, {5, 17}, {}}},
        {"prime split: dropped solution", PrimeSplitCert{FormTag::B, 17, 24, {5, 17}, {}}},
        {"prime split: wrong catalan targets", PrimeSplitCert{FormTag::B, 41, 24, {5}, {}}},
        {"prime split: form C", PrimeSplitCert{FormTag::C, 41, 24, {5, 17}, {}}},
        {"order chain: ord(2, 27) = 9", chain_with([](auto& c) { c.steps[0] = OrderFact{2, 27, 9}; })},
        {"order chain: dropped conclusion", chain_with([](auto& c) { c.steps.pop_back(); })},
        {"order chain: dropped final constraint",
         chain_with([](auto& c) { c.steps.erase(c.steps.end() - 2); })},
        {"order chain: target 5 -> 7", chain_with([](auto& c) { c.t = 7; })},
        {"order chain: dropped solution", chain_with([](auto& c) { c.solutions.pop_back(); })},
        {"successor: 5 does not divide 42", SuccessorSmoothnessCert{41, BigInt(5), std::nullopt, {}}},
        {"successor: wrong exponents", SuccessorSmoothnessCert{5, std::nullopt, ExpPair{2, 1}, {{2, 1}}}},
        {"successor: missing solution", SuccessorSmoothnessCert{17, std::nullopt, ExpPair{1, 2}, {}}},
        {"gersonides: dropped pair", GersonidesAxiomCert{FormTag::A, {{1, 0}}}},
    };
}

} // namespace hdiff::fixtures
