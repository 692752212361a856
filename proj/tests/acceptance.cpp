// Acceptance gate: runs the thirteen headline criteria end to end and prints
// one PASS/FAIL line per criterion.  Exit status 0 iff everything passed.

#include "dmm/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> checks;
    double budget_ms;  // 0 = untimed
};

}  // namespace

int main() {
    using namespace dmm::verify;

    const std::vector<Criterion> criteria = {
        {1, "catalog soundness (full class validation)", {"catalog-validation"}, 1000.0},
        {2, "minimal-variety generators and 0-generated simples",
         {"zero-generated-simples"}, 0.0},
        {3, "six covers of V(C4) within M", {"six-covers"}, 10000.0},
        {4, "case I-IV fusion/residuation table conformance", {"case-tables"}, 0.0},
        {5, "T5/T6 Dunn verification (T5 idempotent)", {"t5-t6"}, 0.0},
        {6, "A_p family and the totally-ordered size theorem",
         {"ap-family", "theorem-even"}, 0.0},
        {7, "B_p family", {"bp-family"}, 0.0},
        {8, "exhaustiveness enumerations (8 on <=6, none on 7, 2 for D4)",
         {"eight-extensions", "two-d4-extensions"}, 1800000.0},
        {9, "crystalline decomposition round-trip", {"decompose-roundtrip"}, 0.0},
        {10, "hom uniqueness onto C4 with singleton bound fibers", {"hom-uniqueness"}, 0.0},
        {11, "retract properties in M and on subdirect products",
         {"retracts-in-m", "subdirect-retracts"}, 0.0},
        {12, "lower-bound counting rules and the 68 composite", {"counting-68"}, 0.0},
        {13, "filter/congruence duality and Sugihara quotients",
         {"filter-congruence-duality", "sugihara-chains"}, 0.0},
    };

    SuiteOptions opts;
    opts.parallel = true;
    opts.check_coverage = false;

    bool all_ok = true;
    for (const auto& cr : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult res = run_named(cr.checks, opts);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        bool ok = res.all_passed();
        std::string note;
        if (cr.budget_ms > 0 && ms > cr.budget_ms) {
            ok = false;
            note = " [over budget " + std::to_string(static_cast<long long>(cr.budget_ms)) +
                   " ms]";
        }
        all_ok = all_ok && ok;
        std::printf("%s  criterion %2d: %s (%.0f ms)%s\n", ok ? "PASS" : "FAIL", cr.number,
                    cr.title.c_str(), ms, note.c_str());
        if (!ok)
            for (const auto& r : res.results)
                for (const auto& f : r.failures)
                    std::printf("      ! %s: %s\n", r.name.c_str(), f.c_str());
    }
    return all_ok ? 0 : 1;
}
