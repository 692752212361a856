#include "dmm/ops.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <unordered_map>

namespace dmm::ops {

namespace {

constexpr std::array kOps = {
    "validate",
    "derive",
    "check_equation",
    "classify",
    "leq",
    "direct_product",
    "subalgebra_generated",
    "deductive_filters",
    "congruence_of_filter",
    "filter_of_congruence",
    "quotient",
    "skew_reflection",
    "reflection",
    "congruence_reflect",
    "rigorous_extension",
    "decompose_crystalline",
    "find_homomorphisms",
    "is_crystalline",
    "find_embeddings",
    "is_isomorphic",
    "is_retract",
    "zero_generated_core",
    "build",
    "complete_partial",
    "build_sugihara",
    "build_Ap",
    "build_Bp",
    "enumerate",
    "enumerate_extensions",
    "canonical_dedupe",
};

std::mutex mu;
std::unordered_map<std::string, bool>& table() {
    static std::unordered_map<std::string, bool> t = [] {
        std::unordered_map<std::string, bool> m;
        for (const char* op : kOps) m[op] = false;
        return m;
    }();
    return t;
}

}  // namespace

void touch(const std::string& op) {
    std::lock_guard lock(mu);
    table()[op] = true;
}

std::vector<std::string> registered() {
    return {kOps.begin(), kOps.end()};
}

std::vector<std::string> untouched() {
    std::lock_guard lock(mu);
    std::vector<std::string> out;
    for (const char* op : kOps)
        if (!table()[op]) out.emplace_back(op);
    return out;
}

void reset() {
    std::lock_guard lock(mu);
    for (auto& [k, v] : table()) v = false;
}

}  // namespace dmm::ops
