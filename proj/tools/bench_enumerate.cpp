// Compares the serial reference enumeration against the OpenMP path on the
// headline searches and reports speedups.  Both paths must produce the same
// canonical output; this is asserted, not assumed.

#include "dmm/catalog.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/morphisms.hpp"

#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dmm;

namespace {

struct BenchCase {
    std::string name;
    ConstraintBundle bundle;
    const FiniteAlgebra* base = nullptr;
};

double run_case(const BenchCase& bc, bool parallel, int jobs, size_t* count) {
    EnumerateOptions opts;
    opts.parallel = parallel;
    opts.jobs = jobs;
    auto res = bc.base ? enumerate_extensions(*bc.base, bc.bundle, opts)
                       : enumerate_algebras(bc.bundle, opts);
    *count = res.algebras.size();
    return res.stats.milliseconds;
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    if (argc > 1) jobs = std::stoi(argv[1]);
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    int threads = 1;
#endif

    const auto& c4 = catalog::build("C4");
    const auto& d4 = catalog::build("D4");

    std::vector<BenchCase> cases;
    {
        BenchCase bc;
        bc.name = "simple DMMs, size <= 6";
        bc.bundle.cls = AlgebraClass::DMM;
        bc.bundle.min_size = 2;
        bc.bundle.max_size = 6;
        bc.bundle.simple = true;
        cases.push_back(bc);
    }
    {
        BenchCase bc;
        bc.name = "C4 extensions, sole proper C4, size <= 6";
        bc.bundle.cls = AlgebraClass::DMM;
        bc.bundle.min_size = 5;
        bc.bundle.max_size = 6;
        bc.bundle.simple = true;
        bc.bundle.sole_proper = c4;
        bc.base = &c4;
        cases.push_back(bc);
    }
    {
        BenchCase bc;
        bc.name = "D4 extensions, sole proper D4, size 6";
        bc.bundle.cls = AlgebraClass::DMM;
        bc.bundle.min_size = 6;
        bc.bundle.max_size = 6;
        bc.bundle.simple = true;
        bc.bundle.sole_proper = d4;
        bc.base = &d4;
        cases.push_back(bc);
    }
    {
        BenchCase bc;
        bc.name = "totally ordered C4 extensions through size 8";
        bc.bundle.cls = AlgebraClass::DMM;
        bc.bundle.min_size = 5;
        bc.bundle.max_size = 8;
        bc.bundle.simple = true;
        bc.bundle.totally_ordered = true;
        bc.bundle.sole_proper = c4;
        bc.base = &c4;
        cases.push_back(bc);
    }
    {
        BenchCase bc;
        bc.name = "all De Morgan monoids, size <= 7";
        bc.bundle.cls = AlgebraClass::DMM;
        bc.bundle.min_size = 1;
        bc.bundle.max_size = 7;
        cases.push_back(bc);
    }

    std::printf("%-46s %10s %12s %12s %8s\n", "case", "results", "serial ms", "omp ms",
                "speedup");
    for (const auto& bc : cases) {
        size_t n_serial = 0, n_parallel = 0;
        double serial = run_case(bc, false, 1, &n_serial);
        double parallel = run_case(bc, true, threads, &n_parallel);
        if (n_serial != n_parallel) {
            std::printf("MISMATCH  %s: serial %zu vs parallel %zu results\n", bc.name.c_str(),
                        n_serial, n_parallel);
            return 1;
        }
        std::printf("%-46s %10zu %12.1f %12.1f %7.2fx\n", bc.name.c_str(), n_serial, serial,
                    parallel, parallel > 0 ? serial / parallel : 0.0);
    }
    std::printf("threads: %d\n", threads);
    return 0;
}
